"""Shadows of alcoves, faces and vertices with respect to chimneys in affine Weyl groups."""

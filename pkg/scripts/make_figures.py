"""Write the reference SVG scenes (also the golden files under tests/golden)."""

import argparse
from pathlib import Path

from chimneys.render import render_svg
from chimneys.scenes import alcove_scene, vertex_scene

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=ROOT / "tests" / "golden")
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name, build in (("vertex_shadow_A2.svg", vertex_scene), ("alcove_shadow_A2.svg", alcove_scene)):
        path = args.out_dir / name
        path.write_text(render_svg(build()), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

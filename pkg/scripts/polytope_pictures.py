"""Write SVG pictures of the two example Newton polytopes into pictures/."""
from pathlib import Path

from valuebound.families import make_example
from valuebound.plot import polytope_picture, render_svg

if __name__ == "__main__":
    out = Path("pictures")
    out.mkdir(exist_ok=True)
    for name in ("polytope-f", "polytope-h"):
        pic = polytope_picture(make_example(name))
        (out / f"{name}.svg").write_text(render_svg(pic))
        print(f"{name}: hull {pic.hull}, contraction {pic.contraction}, "
              f"witness {pic.witness}, inside contraction {pic.lattice_in_contraction}")

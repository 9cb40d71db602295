"""Recompute the worked examples: knots, the Whitehead link, wedges of tori, the torus."""

from turaev.cli import run

EXAMPLES = [
    ["knot", "--fixture", "trefoil"],
    ["certify", "trefoil_2gen.txt,trefoil_wirtinger.txt", "--phi", "u=1,v=1", "--phi", "x1=1,x2=1,x3=1"],
    ["certify", "fig8_wirtinger.txt", "--phi", "x1=1,x2=1,x3=1,x4=1"],
    ["alex", "whitehead_wirtinger.txt", "--multivariable"],
    ["anorm", "whitehead_wirtinger.txt", "--phi", "x1=1,x2=1,x3=1,x4=1,x5=1", "--polytope"],
    ["norm", "torus.cx", "--phi", "x=1,a=0"],
    ["divtest", "1", "1"],
] + [["homology", f"wedge_tori_{n}.txt", "--phi", ",".join(f"x{i}=1" for i in range(1, n + 1))] for n in range(1, 5)]


def main():
    bad = 0
    for argv in EXAMPLES:
        code, _, text = run(argv)
        print("$ turaev " + " ".join(argv))
        print(text.rstrip() + "\n")
        bad += code != 0
    print(f"{len(EXAMPLES) - bad}/{len(EXAMPLES)} examples exited 0")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

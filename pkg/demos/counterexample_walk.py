"""Counterexamples to four dimension-based LCD classification claims.

Each claim assumes every shift constant differs from its own inverse and
then predicts LCD-ness (or self-orthogonality / dual-containment) from the
code's dimension relative to the smallest block length, or from the block
projections being proper. The codes below satisfy the assumptions and break
the predicted conclusions.

Run from the repository root:  python3 demos/counterexample_walk.py
"""

from pathlib import Path

from mtcodes import load_spec, mt

SPECS = Path(__file__).resolve().parents[1] / "specs"

CLAIM_TEXT = {
    "small-dim-lcd": "dim C or dim C-perp below min m_i  =>  LCD",
    "dim-min-lcd-so": "dim C = min m_i  =>  LCD or self-orthogonal",
    "dual-min-lcd-dc": "dim C-perp = min m_i  =>  LCD or dual-containing",
    "projections-lcd": "all block projections proper  =>  LCD",
}


def walk(spec, label):
    rep = mt.refuted_hypotheses(spec)
    hull_dim = mt.expand(spec).hull().dimension
    print(f"== {label}: F{spec.field.order}, blocks {spec.block_lengths}")
    print(f"   dim C = {rep.dimension}, dim C-perp = {rep.dual_dimension},"
          f" min block length = {rep.min_block_length}")
    print(f"   shifts all non-self-inverse: {rep.shifts_non_self_inverse}")
    print(f"   hull dimension {hull_dim}, LCD: {rep.is_lcd},"
          f" self-orthogonal: {rep.is_self_orthogonal},"
          f" dual-containing: {rep.is_dual_containing}")
    hits = []
    for case in rep.cases:
        if case.counterexample:
            print(f"   REFUTED  {CLAIM_TEXT[case.name]}")
            hits.append(case.name)
        elif case.hypothesis:
            print(f"   (claim holds here: {CLAIM_TEXT[case.name]})")
    print()
    return hits


def main():
    refuted = set()
    # The [12,11] code: its dual is a single vector of weight 2 inside
    # blocks of length 3 and 9, which already kills two of the claims.
    refuted.update(walk(load_spec(SPECS / "f5-m3x9.spec"), "f5-m3x9"))
    # The [16,4] code over F_9 has dimension exactly min m_i = 4 and a
    # one-dimensional hull. Its dual (dual dimension 4) breaks the
    # dual-containment claim, so the dual spec is walked as well.
    f9 = load_spec(SPECS / "f9-m4x4x8.spec")
    refuted.update(walk(f9, "f9-m4x4x8"))
    refuted.update(walk(mt.dual_spec(f9), "f9-m4x4x8 dual"))
    # Two more configurations hitting the same claims again.
    refuted.update(walk(load_spec(SPECS / "f5-m5x5.spec"), "f5-m5x5"))
    f4 = load_spec(SPECS / "f4-m4x8.spec")
    refuted.update(walk(f4, "f4-m4x8"))
    refuted.update(walk(mt.dual_spec(f4), "f4-m4x8 dual"))

    missing = set(CLAIM_TEXT) - refuted
    assert not missing, f"claims without a counterexample: {missing}"
    print(f"all {len(CLAIM_TEXT)} claims refuted by executable examples")


if __name__ == "__main__":
    main()

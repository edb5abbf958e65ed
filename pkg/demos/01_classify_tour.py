"""A tour of the classifier on hand-picked inputs.

Each polynomial below lands in a different region of the decision
space: the wide-gap fast path, the separated-profile route, the
rotation-symmetric rejections, and the low-degree curve exceptions
where uniqueness genuinely fails for geometric reasons.

Run:  python3 demos/01_classify_tour.py
"""

from uniqpoly import SLOTS, classify, parse_poly

GALLERY = [
    ("X^4 + X + 1", "smooth quartic: strong for rational functions, but"
                    " its shared curve has genus 1, killing the"
                    " meromorphic half"),
    ("X^5 + X + 1", "gap of 4 with trivial symmetries: strong in every"
                    " sense"),
    ("X^5 + X^2", "no constant term, so the value 0 sits on a critical"
                  " orbit; plain uniqueness survives, strength does not"),
    ("X^2", "a square recognizes nothing: f and -f always collide"),
    ("X^6 + X^3", "support divisible by 3: a rotation of order 3"
                  " preserves values exactly"),
    ("X^3 - 3X", "two critical points with one simple root each: the"
                 " shared curve is a conic, genus 0"),
    ("2X^4 + 6X^2 + 2X + 3", "the quartic whose three critical values"
                             " form a scaled 3-cycle"),
]


def main() -> None:
    for text, story in GALLERY:
        p = parse_poly(text)
        v = classify(p)
        print(f"\n{text}")
        print(f"  {story}")
        for slot in SLOTS:
            mark = {"yes": "+", "no": "-", "out_of_scope": "?"}[v.slot(slot)]
            print(f"  [{mark}] {slot}: {v.slot(slot)}")
        names = [step.rule for step in v.rule_trace]
        print(f"  rules fired: {', '.join(names)}")
        for slot, w in sorted(v.witnesses.items()):
            if w.kind == "paper-exception":
                print(f"  {slot} blocked by curve case: {w.case}")
            else:
                print(f"  {slot} broken by {w.kind} map: {w.identity}")


if __name__ == "__main__":
    main()

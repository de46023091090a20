"""Raising and lowering the polynomial family with step operators.

A step operator is a product of shifted characteristic operators composed
with multiplication by one symmetric coordinate; it sends P_m to a single
P_{m+s} with an exactly computable proportionality factor.
"""
from gegenlab import sigma_closed_form, step, tabulated_shifts
from gegenlab.serialize import kr_str, zpoly_text

print("=" * 70)
print("Three particles: all tabulated shifts applied to P(1,1)")
print("=" * 70)
m = (1, 1)
for s in tabulated_shifts(3):
    target, sigma = step(m, s, 3)
    closed = sigma_closed_form(m, s, 3)
    tag = "ok" if sigma == closed else "MISMATCH"
    if sigma.is_zero:
        print(f"  shift {s}: annihilated (boundary)  [{tag}]")
    else:
        print(f"  shift {s}: sigma = {kr_str(sigma)}  [{tag}]")

print()
print("=" * 70)
print("Raising the four-particle vacuum")
print("=" * 70)
for s in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
    target, sigma = step((0, 0, 0), s, 4)
    print(f"  shift {s}: sigma = {kr_str(sigma)}")
    print(f"      target: {zpoly_text(target)}")

print()
print("=" * 70)
print("A full ladder: vacuum -> (1,0,0) -> (1,1,0) -> (1,1,1)")
print("=" * 70)
state = (0, 0, 0)
for s in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
    target, sigma = step(state, s, 4)
    state = tuple(a + b for a, b in zip(state, s))
    print(f"  -> P{state}, factor {kr_str(sigma)}")
print("  final polynomial:", zpoly_text(step((1, 1, 0), (0, 0, 1), 4)[0]))

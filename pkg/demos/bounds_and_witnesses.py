# coding: utf-8

# # How high can a non-pyramid go?
#
# Write a d-polytope as having d+1+alpha vertices and d+1+beta facets. A
# polytope that is not a pyramid cannot have arbitrarily large dimension
# once alpha and beta are fixed. This script prints the bracket that pins
# that maximum down and builds the polytopes reaching the lower end.

from polyfew import crude_k_bound, d_bracket, strip_core, verify_witness, witness
from polyfew.bounds import bounds_table

# The bracket for small excesses.

print(f"{'alpha':>5} {'beta':>5} {'lower':>6} {'upper':>6}")
for a, b, lo, up, _ in bounds_table(4, 4):
    if a and b:
        print(f"{a:>5} {b:>5} {lo:>6} {up:>6}")

# For each pair there is an explicit witness: a non-pyramid with exactly
# the required vertex and facet excess in the lower-bound dimension.

w = witness(2, 3)
print(w.dim, w.alpha, w.beta, strip_core(w).apex_count)

# The whole grid checks out.

reports = [verify_witness(a, b) for a in range(1, 9) for b in range(1, 9)]
print(sum(r.matches for r in reports), "of", len(reports))

# On the diagonal alpha = beta the bracket leaves a gap that widens with k.

print([d_bracket(k, k) for k in range(1, 5)])

# A crude bound on the number of combinatorial types, shown as bit length.

print(crude_k_bound(2, 2).bit_length())

#!/usr/bin/env python3
"""From a Cayley table to a Markov model in three steps.

1. Represent each element a_i by the 0/1 matrix A_i of left
   multiplication (A_i e_j = e_{i*j}).
2. Shift to rate matrices L_i = -I + A_i: zero column sums, nonnegative
   off-diagonals.
3. Span the L_i.  The product rule of the semigroup forces
   L_i L_j = -L_i - L_j + L_k, so the span is closed under matrix
   products and hence under commutators: every such model is
   multiplicatively closed.

The map can collapse: duplicate A_i shrink the basis, and A_i equal to
the identity contribute nothing.  The equal-input (F81) semigroup and
its reversal below are the extreme cases.
"""

from liemarkov import make_table, rate_basis, regular_rep, rep_is_injective
from liemarkov.catalog import commutator_table, format_combination


def show(name, rows):
    t = make_table(rows)
    rep = regular_rep(t)
    sub = rate_basis(rep)
    print(f"{name}: injective rep: {rep_is_injective(rep)}, "
          f"dimension {sub.dim} from {t.order} elements")
    for idx, g in enumerate(sub.basis, start=1):
        print(f"  L{idx} = " + "; ".join(str(list(row)) for row in g))
    for i, j, coeffs in commutator_table(sub):
        print(f"  [L{i + 1}, L{j + 1}] = {format_combination(coeffs)}")
    print()


# a*b = a on four elements: the equal-input model (F81 on 4 states)
show("equal-input", [[i] * 4 for i in range(4)])

# its reversal a*b = b: every A_i is the identity, the model is trivial
show("right-constant", [[j for j in range(4)] for _ in range(4)])

# the cyclic group C3: the identity generator drops, dimension 2
show("C3", [[(i + j) % 3 for j in range(3)] for i in range(3)])

# a three-state semigroup with a sink: state 3 becomes absorbing
from liemarkov import absorbing_states, is_reducible

sink = make_table([[0, 0, 2], [1, 1, 2], [2, 2, 2]])
sub = rate_basis(regular_rep(sink))
print("sink semigroup: absorbing states (1-based):",
      sorted(s + 1 for s in absorbing_states(sub)),
      "| reducible:", is_reducible(sub))

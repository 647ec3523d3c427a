"""Random valid branch data on relative curves, for property tests."""

import random
from math import gcd

from cubictk.model.group.abelian import FiniteAbelianGroup

from .branch import BranchComponent, BranchData, element_order

# Odd orders only: for even inertia orders the surface formula has denominators 8 that (#G)² does not clear.
FUZZ_GROUPS = ((3,), (5,), (7,), (9,), (15,), (3, 3))
FUZZ_PRIMES = (11, 13, 17)


def fuzz_branch_data(seed: int, max_components: int = 4) -> BranchData:
    """Return random surface branch data: random inertia, intersection numbers and Euler characteristics."""
    generator = random.Random(seed)  # noqa: S311
    group = FiniteAbelianGroup(generator.choice(FUZZ_GROUPS))
    components = []
    for index in range(generator.randint(1, max_components)):
        element = tuple(generator.randrange(factor) for factor in group.invariant_factors)
        order = element_order(group, element)
        unit = generator.choice([u for u in range(1, order + 1) if gcd(u, order) == 1])
        component = BranchComponent(
            f"y{index}",
            inertia_order=order,
            self_intersection=generator.randint(-6, -1),
            euler_char=generator.randint(-3, 3),
            inertia_exponent=unit,
            inertia_generator=element,
            prime=generator.choice(FUZZ_PRIMES),
        )
        components.append(component)
    cross = {(i, j): generator.randint(0, 3) for i in range(len(components)) for j in range(i + 1, len(components))}
    return BranchData(group, tuple(components), cross)

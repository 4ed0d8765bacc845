"""Frobenius-twisted conjugacy classes of automorphism groups.

Over a finite ground field the Galois group is generated topologically by
the q-power Frobenius, so a continuous cocycle with values in Aut(E) is
determined by its value at Frobenius, and two cocycles agree up to
coboundary exactly when their values lie in the same twisted conjugacy
class {sigma^-1 * tau * Fr(sigma)}.  This module computes those classes,
cocycle values and orders, the Galois-stable subgroups, and the induced
maps between class sets for a stable subgroup (kernel sizes and fiber
collisions).

Convention: a cocycle's value at Fr^j is the left-to-right product
Phi * Fr(Phi) * ... * Fr^{j-1}(Phi); the cocycle identity
v(j+k) = v(j) * Fr^j(v(k)) holds and is exercised by the tests.
"""

from . import autmap


class FrobAction:
    """Frobenius acting on an automorphism group, as an index permutation.

    `perm[i]` is the index of Fr(elements[i]) where Fr is the q-power map
    of `base`.  The permutation must respect the Cayley table; a failure
    there means the group itself was built wrong.
    """

    __slots__ = ("group", "base", "perm", "order")

    def __init__(self, group, base, perm):
        self.group = group
        self.base = base
        self.perm = tuple(perm)
        n = group.order
        if sorted(self.perm) != list(range(n)):
            raise RuntimeError("Frobenius map is not a permutation of the group")
        table = group.cayley
        for i in range(n):
            for j in range(n):
                if self.perm[table[i][j]] != table[self.perm[i]][self.perm[j]]:
                    raise RuntimeError("Frobenius permutation is not a group automorphism")
        order = 1
        current = self.perm
        identity = tuple(range(n))
        while current != identity:
            current = tuple(self.perm[i] for i in current)
            order += 1
        degree = group.field.n // base.n
        if degree % order != 0:
            raise RuntimeError(
                f"action order {order} does not divide the field degree {degree}"
            )
        self.order = order

    def __repr__(self):
        return (
            f"FrobAction(base={self.base}, group_order={self.group.order}, "
            f"order={self.order})"
        )


class Cocycle:
    """A continuous cocycle, given by its value at Frobenius.

    Any group element defines one; whether it is a coboundary is a
    computed property of its twisted class, not an invariant here.
    """

    __slots__ = ("action", "index")

    def __init__(self, action, image):
        self.action = action
        if isinstance(image, int):
            if not 0 <= image < action.group.order:
                raise ValueError(f"image index {image} out of range")
            self.index = image
        else:
            idx = action.group.index_of(image)
            if idx is None:
                raise ValueError("image is not an element of the group")
            self.index = idx

    @property
    def image(self):
        return self.action.group.elements[self.index]

    def __repr__(self):
        return f"Cocycle(image={autmap.isomorphism_to_str(self.image)})"


class FrobClass:
    """One twisted conjugacy class: canonical representative plus members."""

    __slots__ = ("group", "indices")

    def __init__(self, group, indices):
        self.group = group
        self.indices = tuple(sorted(indices))

    @property
    def rep_index(self):
        return self.indices[0]

    @property
    def representative(self):
        return self.group.elements[self.indices[0]]

    @property
    def members(self):
        return tuple(self.group.elements[i] for i in self.indices)

    @property
    def size(self):
        return len(self.indices)

    def is_trivial(self):
        """Whether this is the class of the identity (the trivial twist)."""
        return self.indices[0] == 0

    def __eq__(self, other):
        # canonical element order makes indices comparable across group
        # objects built from the same curve and field
        if isinstance(other, FrobClass):
            return (self.group.curve == other.group.curve
                    and self.group.field is other.group.field
                    and self.indices == other.indices)
        return NotImplemented

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        rep = autmap.isomorphism_to_str(self.representative)
        return f"FrobClass(rep={rep}, size={self.size})"


def frobenius_action(G, base):
    """The q-power Frobenius of `base` as a permutation of G's elements."""
    if base.p != G.field.p or G.field.n % base.n != 0:
        raise ValueError(f"{G.field} does not extend {base}")
    perm = []
    for f in G.elements:
        k = G.index_of(autmap.galois_apply(f, base))
        if k is None:
            raise RuntimeError("Frobenius carries an automorphism outside the group")
        perm.append(k)
    return FrobAction(G, base, perm)


def _twisted_partition(A, subgroup_indices):
    """Twisted conjugacy classes of the given index set, conjugating only
    by members of that set.  The set must be Frobenius-stable."""
    table = A.group.cayley
    inv = A.group.inverses
    perm = A.perm
    members = sorted(subgroup_indices)
    seen = set()
    classes = []
    for t in members:
        if t in seen:
            continue
        orbit = {table[table[inv[s]][t]][perm[s]] for s in members}
        if not orbit <= set(members):
            raise ValueError("index set is not closed under twisted conjugation")
        seen |= orbit
        classes.append(FrobClass(A.group, orbit))
    classes.sort(key=lambda c: c.rep_index)
    return classes


def frobenius_classes(A):
    """The partition of the group into twisted conjugacy classes.

    Sorted by canonical representative, so the trivial class comes first.
    The number of classes is the number of twists of the curve over
    A.base.
    """
    return _twisted_partition(A, range(A.group.order))


def cocycle_value(c, j):
    """Value of the cocycle at Fr^j; j = 0 gives the identity."""
    if not isinstance(j, int) or j < 0:
        raise ValueError(f"cocycle arguments are nonnegative integers, got {j}")
    return c.action.group.elements[_cocycle_value_index(c, j)]


def _cocycle_value_index(c, j):
    table = c.action.group.cayley
    perm = c.action.perm
    value = 0
    for _ in range(j):
        value = table[c.index][perm[value]]
    return value


def cocycle_order(c, max=None):
    """Least j >= 1 with trivial value at Fr^j, or None within the bound.

    The default bound |G| * (action order) always suffices here, so None
    can only come from an explicit smaller max.
    """
    bound = c.action.group.order * c.action.order if max is None else max
    if bound < 1:
        raise ValueError(f"search bound must be at least 1, got {bound}")
    table = c.action.group.cayley
    perm = c.action.perm
    value = 0
    for j in range(1, bound + 1):
        value = table[c.index][perm[value]]
        if value == 0:
            return j
    return None


def _coboundary_sets(A):
    """B_r = {sigma^-1 * Fr^r(sigma)} for r modulo the action order.

    The twist of a cocycle c splits over the degree-j extension exactly
    when v(j) lies in B_{j mod m}: the restriction of c to the subgroup
    generated by Fr^j is then a coboundary there.
    """
    table = A.group.cayley
    inv = A.group.inverses
    n = A.group.order
    sets = []
    perm_r = tuple(range(n))
    for _ in range(A.order):
        sets.append(frozenset(table[inv[s]][perm_r[s]] for s in range(n)))
        perm_r = tuple(A.perm[i] for i in perm_r)
    return sets


def splitting_degree(c, max=None):
    """Least j >= 1 over which the twist labeled by c becomes trivial.

    Unlike the raw cocycle order this is constant on twisted classes: a
    class member that is itself a twisted coboundary has degree 1 even
    when its telescoped values first return to the identity later.  On
    canonical class representatives the two notions agree for every group
    and base exercised here, which the tests pin down.
    """
    bound = c.action.group.order * c.action.order if max is None else max
    if bound < 1:
        raise ValueError(f"search bound must be at least 1, got {bound}")
    coboundaries = _coboundary_sets(c.action)
    m = c.action.order
    table = c.action.group.cayley
    perm = c.action.perm
    value = 0
    for j in range(1, bound + 1):
        value = table[c.index][perm[value]]
        if value in coboundaries[j % m]:
            return j
    return None


def stable_subgroups(A):
    """All subgroups carried to themselves by the Frobenius action."""
    out = []
    for info in autmap.all_subgroups(A.group):
        members = set(info.indices)
        if all(A.perm[i] in members for i in info.indices):
            out.append(info)
    return out


def resolve_subgroup(A, name):
    """A stable subgroup by short name.

    Names: "trivial", "full", "minus-one" (the subgroup generated by
    negation), or "C<k>" for the stable cyclic subgroup of order k, which
    must exist and be unique among stable subgroups.
    """
    stable = stable_subgroups(A)
    if name == "trivial":
        return stable[0]
    if name == "full":
        return max(stable, key=lambda s: s.order)
    if name == "minus-one":
        minus = autmap.group_structure(A.group).minus_one_index
        want = tuple(sorted({0, minus}))
        for info in stable:
            if info.indices == want:
                return info
        raise ValueError("no stable subgroup generated by negation")
    if name.startswith("C") and name[1:].isdigit():
        k = int(name[1:])
        matches = [s for s in stable if s.order == k and s.is_cyclic]
        if not matches:
            raise ValueError(f"no stable cyclic subgroup of order {k}")
        if len(matches) > 1:
            raise ValueError(f"stable cyclic subgroup of order {k} is not unique")
        return matches[0]
    raise ValueError(f"unknown subgroup name {name!r}")


def cyclic_subgroup(A, image):
    """The subgroup generated by one element, as a subgroup record.

    `image` is a group element or its index.  Use with induced_map only
    when the result is Frobenius-stable; induced_map checks.
    """
    idx = image if isinstance(image, int) else A.group.index_of(image)
    if idx is None or not 0 <= idx < A.group.order:
        raise ValueError("generator is not an element of the group")
    table = A.group.cayley
    powers = {0}
    current = idx
    while current not in powers:
        powers.add(current)
        current = table[current][idx]
    for info in autmap.all_subgroups(A.group):
        if set(info.indices) == powers:
            return info
    raise RuntimeError("cyclic closure missing from the subgroup lattice")


class InducedMapReport:
    """Kernel and fiber data for H-classes mapping into G-classes.

    `image_indices[i]` locates the G-class of h_classes[i] inside
    g_classes.  The kernel counts H-classes landing in the trivial
    G-class; collisions are pairs of distinct H-classes sharing a
    nontrivial image (trivial-image multiplicity is already the kernel
    size).  Both phenomena break injectivity and are reported separately.
    """

    __slots__ = ("action", "subgroup", "h_classes", "g_classes", "image_indices",
                 "kernel_size", "image_size", "collisions", "is_injective")

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def __repr__(self):
        return (
            f"InducedMapReport(h_classes={len(self.h_classes)}, "
            f"kernel={self.kernel_size}, image={self.image_size}, "
            f"collisions={len(self.collisions)})"
        )


def induced_map(A, H):
    """Map the twisted classes of a stable subgroup into the full classes.

    H is a subgroup as reported by stable_subgroups (or all_subgroups,
    provided it is actually stable).
    """
    members = set(H.indices)
    if not all(A.perm[i] in members for i in H.indices):
        raise ValueError("subgroup is not Frobenius-stable")
    h_classes = _twisted_partition(A, H.indices)
    g_classes = frobenius_classes(A)
    locate = {}
    for k, cls in enumerate(g_classes):
        for i in cls.indices:
            locate[i] = k
    image_indices = tuple(locate[cls.rep_index] for cls in h_classes)
    kernel_size = sum(1 for k in image_indices if g_classes[k].is_trivial())
    image_size = len(set(image_indices))
    collisions = []
    for a in range(len(h_classes)):
        for b in range(a + 1, len(h_classes)):
            if image_indices[a] == image_indices[b]:
                if not g_classes[image_indices[a]].is_trivial():
                    collisions.append((a, b))
    return InducedMapReport(
        action=A,
        subgroup=H,
        h_classes=tuple(h_classes),
        g_classes=tuple(g_classes),
        image_indices=image_indices,
        kernel_size=kernel_size,
        image_size=image_size,
        collisions=tuple(collisions),
        is_injective=(kernel_size == 1 and not collisions),
    )


class CapitulationReport:
    """Which twists from a subgroup are already trivial over the base."""

    __slots__ = ("curve", "base", "induced", "capitulating", "surviving")

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def __repr__(self):
        return (
            f"CapitulationReport(capitulating={len(self.capitulating)}, "
            f"surviving={len(self.surviving)})"
        )


def capitulation_report(E, base, H):
    """Capitulation analysis for a curve, ground field, and stable subgroup.

    H may be a subgroup record against automorphism_group(E) or a name
    accepted by resolve_subgroup.  Lists the nontrivial H-classes whose
    twists are isomorphic to E over the base already, and the cocycle
    orders of the classes that survive.
    """
    G = autmap.automorphism_group(E)
    A = frobenius_action(G, base)
    if isinstance(H, str):
        H = resolve_subgroup(A, H)
    report = induced_map(A, H)
    capitulating = []
    surviving = []
    for i, cls in enumerate(report.h_classes):
        if cls.is_trivial():
            continue
        if report.g_classes[report.image_indices[i]].is_trivial():
            capitulating.append(cls)
        else:
            order = cocycle_order(Cocycle(A, cls.rep_index))
            surviving.append((cls, order))
    return CapitulationReport(
        curve=E,
        base=base,
        induced=report,
        capitulating=tuple(capitulating),
        surviving=tuple(surviving),
    )


def class_report(A):
    """JSON-ready summary of the twisted classes, with stable key order."""
    classes = []
    for cls in frobenius_classes(A):
        classes.append({
            "rep": autmap.isomorphism_to_str(cls.representative),
            "size": cls.size,
            "cocycle_order": cocycle_order(Cocycle(A, cls.rep_index)),
        })
    return {
        "base": f"{A.base.p}^{A.base.n}",
        "group_order": A.group.order,
        "action_order": A.order,
        "classes": classes,
    }


def induced_map_report_json(report):
    """JSON-ready summary of an induced-map computation."""
    return {
        "base": f"{report.action.base.p}^{report.action.base.n}",
        "subgroup_order": report.subgroup.order,
        "h_classes": [
            {
                "rep": autmap.isomorphism_to_str(cls.representative),
                "size": cls.size,
                "image_rep": autmap.isomorphism_to_str(
                    report.g_classes[report.image_indices[i]].representative
                ),
            }
            for i, cls in enumerate(report.h_classes)
        ],
        "kernel_size": report.kernel_size,
        "image_size": report.image_size,
        "collisions": [
            [
                autmap.isomorphism_to_str(report.h_classes[a].representative),
                autmap.isomorphism_to_str(report.h_classes[b].representative),
            ]
            for a, b in report.collisions
        ],
        "injective": report.is_injective,
    }

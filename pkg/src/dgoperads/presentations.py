"""Quadratic presentations: the graded ones and the classical degree-zero ones.

Relations are written as lists of terms ``(coeff, k, x, i, y)`` standing for
``coeff * tau^k (x o_i y)`` with ``x``, ``y`` generator names on the letters
1, 2.  A relation "lhs = rhs" is stored as ``lhs - rhs``.
"""

from __future__ import annotations

from functools import lru_cache

from .exalg import LinComb
from .free import FreeOperad, GeneratorSpace, QuadraticData, free_action_space
from .operad import tau_power

# (12) acts on the generator spaces below by the listed signed permutation.
PI_GENS = GeneratorSpace(("1⊗2", "2⊗1", "1∧2"), (0, 0, 1),
                         (((1, 1),), ((0, 1),), ((2, -1),)))
PASC_GENS = GeneratorSpace(("e1", "e2", "e1∧e2"), (0, 0, 1),
                           (((1, 1),), ((0, 1),), ((2, -1),)))
KPRIME_GENS = GeneratorSpace(("1<2", "1>2", "1|2"), (0, 0, 1))
TRIAS_GENS = GeneratorSpace(("1⊣2", "1⊢2", "1×2"), (0, 0, 1))
COPROD_GENS = GeneratorSpace(("⟨1,2⟩", "⟨2,1⟩", "[1,2]"), (0, 0, 1),
                             (((1, 1),), ((0, 1),), ((2, 1),)))
LAMBDA_GENS = GeneratorSpace(("1↶2", "2↶1", "[1,2]"), (0, 0, 1),
                             (((1, 1),), ((0, 1),), ((2, 1),)))


def build_relation(free: FreeOperad, terms) -> LinComb:
    acc = LinComb()
    for coeff, k, x, i, y in terms:
        elem = free.compose(free.generator(x), i, free.generator(y))
        if k % 3:
            elem = free.relabel(elem, tau_power(k))
        acc = acc + elem * coeff
    return acc


def _data(name, gens, rel_terms, symmetric, d_gen=None, direction=1):
    free = FreeOperad(gens, symmetric)
    names = list(rel_terms)
    rels = [build_relation(free, rel_terms[r]) for r in names]
    d = None
    if d_gen is not None:
        d = [{gens.index(h): c for h, c in d_gen.get(g, {}).items()} for g in gens.names]
    return QuadraticData(name, gens, rels, symmetric, d, direction, names)


# ---------------------------------------------------------------------------
# graded presentations

PI_RELATIONS = {
    "rel1": [(1, 0, "1⊗2", 1, "1⊗2"), (-1, 0, "1⊗2", 2, "1⊗2"), (-1, 0, "1⊗2", 2, "2⊗1")],
    "rel2a": [(1, 0, "1∧2", 2, "1⊗2"), (-1, 0, "1⊗2", 1, "1∧2")],
    "rel2b": [(1, 0, "1⊗2", 1, "1∧2"), (-1, 1, "1∧2", 1, "2⊗1")],
    "rel3": [(1, 0, "1∧2", 1, "1∧2"), (1, 0, "1∧2", 2, "1∧2")],
}
# rel3 reads (2∧1) o_1 (1∧2) = (1∧2) o_2 (1∧2); 2∧1 = -(1∧2) gives the sum above.

PASC_RELATIONS = {
    "rela1": [(1, 0, "e1", 1, "e1"), (-1, 2, "e2", 1, "e1")],
    "rela2": [(1, 0, "e2", 1, "e1"), (-1, 0, "e2", 1, "e2")],
    "rela3": [(1, 0, "e1", 1, "e2"), (-1, 1, "e2", 1, "e2")],
    "rela4": [(1, 0, "e2", 1, "e1∧e2")],
    "rela5": [(1, 1, "e1∧e2", 1, "e2"), (-1, 0, "e1", 1, "e1∧e2")],
    "rela6": [(-1, 2, "e1∧e2", 1, "e1"), (-1, 0, "e1", 1, "e1∧e2")],
    "rela7": [(1, 0, "e1∧e2", 1, "e1∧e2"), (-1, 1, "e1∧e2", 1, "e1∧e2")],
}

KPRIME_RELATIONS = {
    "relK1": [(1, 0, "1>2", 2, "1<2"), (-1, 0, "1<2", 1, "1>2")],
    "relK2": [(1, 0, "1>2", 2, "1>2"), (-1, 0, "1>2", 1, "1>2"), (-1, 0, "1>2", 1, "1<2")],
    "relK3": [(1, 0, "1<2", 1, "1<2"), (-1, 0, "1<2", 2, "1<2"), (-1, 0, "1<2", 2, "1>2")],
    "relK4": [(1, 0, "1>2", 2, "1|2"), (-1, 0, "1|2", 1, "1>2")],
    "relK5": [(1, 0, "1<2", 1, "1|2"), (-1, 0, "1|2", 2, "1<2")],
    "relK6": [(1, 0, "1|2", 1, "1<2"), (-1, 0, "1|2", 2, "1>2")],
    "relK7": [(1, 0, "1|2", 1, "1|2"), (1, 0, "1|2", 2, "1|2")],
}

TRIAS_RELATIONS = {
    "relT1": [(1, 0, "1⊣2", 1, "1⊢2"), (-1, 0, "1⊢2", 2, "1⊣2")],
    "relT2": [(1, 0, "1⊣2", 2, "1⊣2"), (-1, 0, "1⊣2", 2, "1⊢2")],
    "relT3": [(1, 0, "1⊣2", 1, "1⊣2"), (-1, 0, "1⊣2", 2, "1⊢2")],
    "relT4": [(1, 0, "1⊢2", 1, "1⊢2"), (-1, 0, "1⊢2", 1, "1⊣2")],
    "relT5": [(1, 0, "1⊢2", 2, "1⊢2"), (-1, 0, "1⊢2", 1, "1⊣2")],
    "relT6": [(1, 0, "1×2", 1, "1⊢2"), (-1, 0, "1⊢2", 2, "1×2")],
    "relT7": [(1, 0, "1×2", 2, "1⊣2"), (-1, 0, "1⊣2", 1, "1×2")],
    "relT8": [(1, 0, "1×2", 1, "1⊣2"), (-1, 0, "1×2", 2, "1⊢2")],
    "relT9": [(1, 0, "1⊢2", 1, "1×2")],
    "relT10": [(1, 0, "1⊣2", 2, "1×2")],
    "relT11": [(1, 0, "1×2", 1, "1×2"), (1, 0, "1×2", 2, "1×2")],
}

COPROD_RELATIONS = {
    "relU1": [(1, 0, "⟨1,2⟩", 1, "⟨1,2⟩"), (-1, 1, "⟨1,2⟩", 1, "⟨2,1⟩"),
              (1, 2, "⟨2,1⟩", 1, "⟨2,1⟩")],
    "relU2": [(1, 2, "[1,2]", 1, "⟨1,2⟩"), (1, 1, "[1,2]", 1, "⟨2,1⟩"),
              (-1, 0, "⟨1,2⟩", 1, "[1,2]")],
    "relU3": [(1, 0, "⟨2,1⟩", 1, "[1,2]")],
    "relU4": [(1, 0, "[1,2]", 1, "[1,2]"), (1, 1, "[1,2]", 1, "[1,2]"),
              (1, 2, "[1,2]", 1, "[1,2]")],
}

# relM2 prints an unindexed composition; it is read as o_1.
LAMBDA_RELATIONS_PRINTED = {
    "relM1": [(1, 1, "2↶1", 1, "1↶2"), (-1, 0, "1↶2", 1, "1↶2"),
              (-1, 1, "2↶1", 1, "2↶1"), (1, 2, "1↶2", 1, "2↶1")],
    "relM2": [(1, 0, "[1,2]", 1, "1↶2"), (-1, 1, "[1,2]", 1, "2↶1"),
              (-1, 2, "1↶2", 1, "[1,2]")],
    "relM3": [(1, 0, "[1,2]", 1, "[1,2]"), (1, 1, "[1,2]", 1, "[1,2]"),
              (1, 2, "[1,2]", 1, "[1,2]")],
}


def inverse_cycle_reading(rels: dict) -> dict:
    """Replace every ``tau^k`` by ``tau^-k``."""
    return {r: [(c, (-k) % 3, x, i, y) for c, k, x, i, y in t] for r, t in rels.items()}


# The printed Lambda relations agree with the algebra-level identities of
# Lambda-algebras once tau is read as the inverse cycle and the middle term of
# relM2 changes sign; only this reading has the dimensions (9, 9, 2) in arity 3
# and is orthogonal to the relations of Pasc.
LAMBDA_RELATIONS = inverse_cycle_reading(dict(
    LAMBDA_RELATIONS_PRINTED,
    relM2=[(-c if k == 1 else c, k, x, i, y) for c, k, x, i, y in LAMBDA_RELATIONS_PRINTED["relM2"]],
))


@lru_cache(maxsize=None)
def pi_presentation() -> QuadraticData:
    return _data("pi", PI_GENS, PI_RELATIONS, True,
                 {"1⊗2": {"1∧2": 1}, "2⊗1": {"1∧2": -1}}, direction=1)


@lru_cache(maxsize=None)
def pasc_presentation() -> QuadraticData:
    return _data("pasc", PASC_GENS, PASC_RELATIONS, True,
                 {"e1∧e2": {"e1": 1, "e2": -1}}, direction=-1)


@lru_cache(maxsize=None)
def kprime_presentation() -> QuadraticData:
    return _data("kprime", KPRIME_GENS, KPRIME_RELATIONS, False,
                 {"1<2": {"1|2": 1}, "1>2": {"1|2": -1}}, direction=1)


@lru_cache(maxsize=None)
def trias_presentation() -> QuadraticData:
    return _data("trias", TRIAS_GENS, TRIAS_RELATIONS, False,
                 {"1×2": {"1⊣2": 1, "1⊢2": -1}}, direction=-1)


@lru_cache(maxsize=None)
def coprod_presentation() -> QuadraticData:
    return _data("coprod", COPROD_GENS, COPROD_RELATIONS, True,
                 {"[1,2]": {"⟨1,2⟩": 1, "⟨2,1⟩": 1}}, direction=-1)


@lru_cache(maxsize=None)
def lambda_presentation() -> QuadraticData:
    return _data("lambda", LAMBDA_GENS, LAMBDA_RELATIONS, True,
                 {"1↶2": {"[1,2]": 1}, "2↶1": {"[1,2]": 1}}, direction=1)


# symmetric versions with free action, used by the morphisms of diagram rows 2 and 4

def _free_action_relations(terms_by_name, rename):
    return {r: [(c, k, rename[x], i, rename[y]) for c, k, x, i, y in t]
            for r, t in terms_by_name.items()}


K_SYM_GENS = free_action_space(("1<2", "1>2", "1|2"), (0, 0, 1), ("2<1", "2>1", "2|1"))
TRIAS_SYM_GENS = free_action_space(("1⊣2", "1⊢2", "1×2"), (0, 0, 1), ("2⊣1", "2⊢1", "2×1"))


@lru_cache(maxsize=None)
def k_presentation() -> QuadraticData:
    return _data("k", K_SYM_GENS, KPRIME_RELATIONS, True,
                 {"1<2": {"1|2": 1}, "1>2": {"1|2": -1},
                  "2<1": {"2|1": 1}, "2>1": {"2|1": -1}}, direction=1)


@lru_cache(maxsize=None)
def trias_sym_presentation() -> QuadraticData:
    return _data("trias-sym", TRIAS_SYM_GENS, TRIAS_RELATIONS, True,
                 {"1×2": {"1⊣2": 1, "1⊢2": -1}, "2×1": {"2⊣1": 1, "2⊢1": -1}}, direction=-1)


# ---------------------------------------------------------------------------
# classical operads, concentrated in degree zero

COM_GENS = GeneratorSpace(("μ",), (0,), (((0, 1),),))
LIE_GENS = GeneratorSpace(("b",), (0,), (((0, -1),),))
AS_GENS = free_action_space(("1·2",), (0,), ("2·1",))
ZIN_GENS = free_action_space(("1⊗2",), (0,), ("2⊗1",))
DEND_GENS = free_action_space(("1<2", "1>2"), (0, 0), ("2<1", "2>1"))
PRELIE_GENS = free_action_space(("1◁2",), (0,), ("2◁1",))
PERM_GENS = free_action_space(("e1",), (0,), ("e2",))
DIAS_GENS = free_action_space(("1⊣2", "1⊢2"), (0, 0), ("2⊣1", "2⊢1"))
LEIB_GENS = free_action_space(("⟨1,2⟩",), (0,), ("⟨2,1⟩",))
DEND_NS_GENS = GeneratorSpace(("1<2", "1>2"), (0, 0))
DIAS_NS_GENS = GeneratorSpace(("1⊣2", "1⊢2"), (0, 0))
AS_NS_GENS = GeneratorSpace(("1·2",), (0,))


def _subset(rels, names):
    return {k: rels[k] for k in names}


CLASSICAL_RELATIONS = {
    "com": (COM_GENS, {"assoc1": [(1, 0, "μ", 1, "μ"), (-1, 1, "μ", 1, "μ")],
                       "assoc2": [(1, 0, "μ", 1, "μ"), (-1, 2, "μ", 1, "μ")]}),
    "lie": (LIE_GENS, {"jacobi": [(1, 0, "b", 1, "b"), (1, 1, "b", 1, "b"), (1, 2, "b", 1, "b")]}),
    "as": (AS_GENS, {"assoc": [(1, 0, "1·2", 1, "1·2"), (-1, 0, "1·2", 2, "1·2")]}),
    "zin": (ZIN_GENS, _subset(PI_RELATIONS, ["rel1"])),
    "dend": (DEND_GENS, _subset(KPRIME_RELATIONS, ["relK1", "relK2", "relK3"])),
    "prelie": (PRELIE_GENS, _free_action_relations(
        _subset(LAMBDA_RELATIONS, ["relM1"]), {"1↶2": "1◁2", "2↶1": "2◁1"})),
    "perm": (PERM_GENS, _subset(PASC_RELATIONS, ["rela1", "rela2", "rela3"])),
    "dias": (DIAS_GENS, _subset(TRIAS_RELATIONS, ["relT1", "relT2", "relT3", "relT4", "relT5"])),
    "leib": (LEIB_GENS, _subset(COPROD_RELATIONS, ["relU1"])),
}


@lru_cache(maxsize=None)
def classical_presentation(name: str) -> QuadraticData:
    if name == "dend-ns":
        return _data(name, DEND_NS_GENS, CLASSICAL_RELATIONS["dend"][1], False)
    if name == "dias-ns":
        return _data(name, DIAS_NS_GENS, CLASSICAL_RELATIONS["dias"][1], False)
    if name == "as-ns":
        return _data(name, AS_NS_GENS, CLASSICAL_RELATIONS["as"][1], False)
    if name not in CLASSICAL_RELATIONS:
        raise KeyError(f"unknown classical operad {name!r}")
    gens, rels = CLASSICAL_RELATIONS[name]
    return _data(name, gens, rels, True)


GRADED = {
    "pi": pi_presentation,
    "pasc": pasc_presentation,
    "kprime": kprime_presentation,
    "trias": trias_presentation,
    "coprod": coprod_presentation,
    "lambda": lambda_presentation,
    "k": k_presentation,
    "trias-sym": trias_sym_presentation,
}


def presentation(name: str) -> QuadraticData:
    if name in GRADED:
        return GRADED[name]()
    return classical_presentation(name)

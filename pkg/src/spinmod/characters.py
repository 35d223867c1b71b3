"""Formal characters of the double covers and the branching operators on them.

Labels come in four flavours: Ord(lam) for an ordinary irreducible [lam] of
the symmetric group, Spin(lam) for a spin character <lam> with lam in D+,
Spin(lam, '+') / Spin(lam, '-') for an associate pair when lam is in D-,
and Brauer(mu) for the irreducible Brauer character phi(mu).

The restriction operators e_i and induction operators f_i act on ordinary
and spin labels.  For spin labels the sign of a D- label is carried along
literally: a D- target reached from a D- source keeps the source's sign.
Which member of a pair is called '+' is a labelling choice, so verifications
should use sign-symmetric vectors or sum over both signs.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple, Optional

from .abacus import staircase_height
from .errors import MalformedText, MixedKinds, MixedLevels, NotTwoRegular, ZeroCharacter
from .partitions import (Partition, add_node, boundary_nodes, ev, parse,
                         remove_node, spin_addable_steps, spin_removable_steps)

_MAX_STEPS = 1000


def _inner_text(lam):
    return ",".join(map(str, lam))


@dataclass(frozen=True)
class Ord:
    partition: Partition

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))

    @property
    def level(self):
        return self.partition.size

    def __str__(self):
        return f"[{_inner_text(self.partition)}]"


@dataclass(frozen=True)
class Spin:
    partition: Partition
    sign: Optional[str] = None

    def __post_init__(self):
        lam = Partition(self.partition)
        object.__setattr__(self, "partition", lam)
        if not lam.is_two_regular():
            raise NotTwoRegular(f"spin label {lam} is not 2-regular")
        if ev(lam) % 2 == 0 and self.sign is not None:
            raise ValueError(f"<{lam}> is in D+ and carries no sign")
        if ev(lam) % 2 == 1 and self.sign not in ("+", "-"):
            raise ValueError(f"<{lam}> is in D- and needs a sign '+' or '-'")

    @property
    def level(self):
        return self.partition.size

    def associate(self):
        if self.sign is None:
            return self
        return Spin(self.partition, "-" if self.sign == "+" else "+")

    def __str__(self):
        return f"<{_inner_text(self.partition)}>{self.sign or ''}"


@dataclass(frozen=True)
class Brauer:
    partition: Partition

    def __post_init__(self):
        lam = Partition(self.partition)
        object.__setattr__(self, "partition", lam)
        if not lam.is_two_regular():
            raise NotTwoRegular(f"Brauer label {lam} is not 2-regular")

    @property
    def level(self):
        return self.partition.size

    def __str__(self):
        return f"phi({_inner_text(self.partition)})"


_KIND_ORDER = {Ord: 0, Spin: 1, Brauer: 2}


def label_key(label):
    return (_KIND_ORDER[type(label)], tuple(-p for p in label.partition),
            getattr(label, "sign", None) or "")


def spin_label(lam, sign=None):
    """<lam> if lam is in D+, else the list of both associates (or just `sign`)."""
    lam = Partition(lam)
    if ev(lam) % 2 == 0:
        return [Spin(lam)]
    if sign is None:
        return [Spin(lam, "+"), Spin(lam, "-")]
    return [Spin(lam, sign)]


_LABEL = re.compile(r"^\s*(?:\[(?P<ord>[^\]]*)\]|<(?P<spin>[^>]*)>(?P<sign>[+-]?)"
                    r"|phi\((?P<phi>[^)]*)\))\s*$")


def parse_label(text):
    m = _LABEL.match(text)
    if not m:
        raise MalformedText(f"cannot parse character label {text!r}")
    if m.group("ord") is not None:
        return Ord(parse(m.group("ord")))
    if m.group("phi") is not None:
        return Brauer(parse(m.group("phi")))
    return Spin(parse(m.group("spin")), m.group("sign") or None)


def _is_brauer(label):
    return isinstance(label, Brauer)


class FormalChar:
    """An immutable finite combination of labels with rational coefficients."""

    __slots__ = ("_terms", "_level", "_brauer")

    def __init__(self, terms=None):
        clean = {}
        for label, c in (terms.items() if isinstance(terms, dict) else (terms or ())):
            c = Fraction(c)
            if c:
                clean[label] = clean.get(label, 0) + c
        clean = {k: v for k, v in clean.items() if v}
        levels = {lab.level for lab in clean}
        kinds = {_is_brauer(lab) for lab in clean}
        if len(levels) > 1:
            raise MixedLevels(f"labels of sizes {sorted(levels)} in one character")
        if len(kinds) > 1:
            raise MixedKinds("ordinary and Brauer labels in one character")
        self._terms = clean
        self._level = levels.pop() if levels else None
        self._brauer = kinds.pop() if kinds else None

    @classmethod
    def of(cls, *labels):
        return cls({lab: 1 for lab in labels})

    @property
    def level(self):
        return self._level

    @property
    def is_brauer(self):
        return self._brauer

    def __getitem__(self, label):
        return self._terms.get(label, Fraction(0))

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: label_key(kv[0]))

    def labels(self):
        return [lab for lab, _ in self.items()]

    def __iter__(self):
        return iter(self.labels())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, FormalChar) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return FormalChar(out)

    __radd__ = __add__

    def __neg__(self):
        return FormalChar({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return FormalChar({k: v * scalar for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / Fraction(scalar))

    def restrict_to(self, predicate):
        """The part of the character whose labels satisfy predicate."""
        return FormalChar({k: v for k, v in self._terms.items() if predicate(k)})

    def swap_signs(self):
        return FormalChar({k.associate() if isinstance(k, Spin) else k: v
                           for k, v in self._terms.items()})

    def is_sign_symmetric(self):
        return self == self.swap_signs()

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in self.items())

    def __repr__(self):
        return f"FormalChar({self})"


ZERO = FormalChar()


def parse_char(text):
    """Inverse of str(FormalChar): "c1*label1 + c2*label2"."""
    text = text.strip()
    if text == "0":
        return ZERO
    terms = {}
    for chunk in re.split(r"\s\+\s", text):
        coeff, _, label = chunk.strip().partition("*")
        if not label:
            coeff, label = "1", coeff
        lab = parse_label(label)
        terms[lab] = terms.get(lab, 0) + Fraction(coeff)
    return FormalChar(terms)


@lru_cache(maxsize=None)
def _label_step(label, i, direction):
    """e_i or f_i of a single ordinary or spin label, as ((label, coeff), ...)."""
    lam = label.partition
    out = {}
    if isinstance(label, Ord):
        which = "removable" if direction == "e" else "addable"
        move = remove_node if direction == "e" else add_node
        for node in boundary_nodes(lam, which, residue_filter=i):
            target = Ord(move(lam, node))
            out[target] = out.get(target, 0) + 1
    elif isinstance(label, Spin):
        if direction == "e":
            targets = [remove_node(lam, n) for n in spin_removable_steps(lam, i)]
        else:
            targets = [add_node(lam, n) for n in spin_addable_steps(lam, i)]
        for mu in targets:
            for target in spin_label(mu, label.sign):
                out[target] = out.get(target, 0) + 1
    else:
        raise MixedKinds(f"branching operators act on ordinary labels, not {label}")
    return tuple(out.items())


def _step(i, direction, chi):
    if i not in (0, 1):
        raise ValueError("residue must be 0 or 1")
    out = {}
    for label, c in chi._terms.items():
        for target, d in _label_step(label, i, direction):
            out[target] = out.get(target, 0) + c * d
    return FormalChar(out)


def e_step(i, chi):
    return _step(i, "e", chi)


def f_step(i, chi):
    return _step(i, "f", chi)


def divided(i, r, direction, chi):
    """e_i^(r) or f_i^(r): apply the operator r times and divide by r!."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    for _ in range(r):
        chi = _step(i, direction, chi)
    return chi * Fraction(1, factorial(r))


def eps(i, chi, direction="e"):
    """Largest r with e_i^r chi nonzero (or f_i^r chi with direction 'f')."""
    if not chi:
        raise ZeroCharacter("eps of the zero character")
    r = 0
    chi = _step(i, direction, chi)
    while chi:
        r += 1
        if r > _MAX_STEPS:
            raise RuntimeError("operator power did not terminate")
        chi = _step(i, direction, chi)
    return r


def phi(i, chi):
    return eps(i, chi, "f")


def max_op(i, direction, chi):
    return divided(i, eps(i, chi, direction), direction, chi)


def inner(chi, label):
    """(chi : label) for an orthonormal label."""
    if not chi:
        return Fraction(0)
    if chi.is_brauer != _is_brauer(label):
        raise MixedKinds("pairing ordinary and Brauer labels")
    if chi.level != label.level:
        raise MixedLevels(f"pairing level {chi.level} with level {label.level}")
    return chi[label]


def e_bullet(core, chi):
    """The two-step restriction attached to a staircase core.

    Apply e_1 then e_0 when the core height is even, e_0 then e_1 when odd.
    """
    if staircase_height(core) % 2 == 0:
        return e_step(0, e_step(1, chi))
    return e_step(1, e_step(0, chi))


class KleshchevData(NamedTuple):
    normal: tuple
    conormal: tuple
    signature: tuple
    reduced: tuple


def signature_text(sig):
    return "".join(s for s, _ in sig)


def kleshchev(mu, i):
    """Normal and conormal i-nodes of a 2-regular mu.

    The i-signature lists + for each addable i-node and - for each removable
    i-node, reading down the rows; adjacent "+-" pairs are cancelled until
    none remain.
    """
    mu = Partition(mu)
    if not mu.is_two_regular():
        raise NotTwoRegular(f"{mu} is not 2-regular")
    entries = [("-", n) for n in boundary_nodes(mu, "removable", residue_filter=i)]
    entries += [("+", n) for n in boundary_nodes(mu, "addable", residue_filter=i)]
    entries.sort(key=lambda e: e[1].row)
    stack = []
    for entry in entries:
        if entry[0] == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append(entry)
    normal = tuple(n for s, n in stack if s == "-")
    conormal = tuple(n for s, n in stack if s == "+")
    return KleshchevData(normal, conormal, tuple(entries), tuple(stack))


def brauer_max(mu, i, direction):
    """e_i^max or f_i^max of phi(mu): remove every normal, or add every conormal, i-node."""
    data = kleshchev(mu, i)
    lam = Partition(mu)
    if direction == "e":
        for node in data.normal:
            lam = remove_node(lam, node)
    else:
        for node in reversed(data.conormal):
            lam = add_node(lam, node)
    return lam

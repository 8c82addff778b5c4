"""Whitehead automorphisms: orbit minimization, primitivity, basis and
free-factor recognition.

A cut-type automorphism is given by a multiplier letter x and a letter set S
with x in S and x^-1 not in S; it fixes x and sends any other letter y to
(x^-1 if y^-1 in S) y (x if y in S).  Permutation-type automorphisms are
signed permutations of the basis.  Greedy descent that applies, each round,
the single automorphism with the greatest total length reduction reaches the
minimal total length in the automorphism orbit; the final full scan that
finds no reduction is the minimality certificate (peak reduction).

Enumeration order is fixed (multiplier letter index, then subset bitmask
ascending) so minimization traces are deterministic.  Rank-6 and rank-8
enumerations run to ~12k and ~260k cut automorphisms; they are streamed,
never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .stallings import basis as core_basis, build_core
from .words import Word, letter_key

Table = tuple[tuple[int, ...], ...]


class RankMismatchError(ValueError):
    """A word uses generator indices beyond the declared rank."""


def _letters_in_order(rank: int) -> list[int]:
    out = []
    for k in range(1, rank + 1):
        out.extend((k, -k))
    return out


class WhiteheadAut:
    """One Whitehead automorphism of a fixed finite rank."""

    __slots__ = ("rank", "kind", "multiplier", "subset", "mapping", "_table")

    def __init__(self, rank: int, kind: str, multiplier: Optional[int] = None,
                 subset: Optional[frozenset[int]] = None,
                 mapping: Optional[tuple[int, ...]] = None):
        if kind == "cut":
            if multiplier is None or subset is None:
                raise ValueError("cut automorphism needs multiplier and subset")
            if multiplier not in subset or -multiplier in subset:
                raise ValueError("subset must contain the multiplier and not its inverse")
            table = self._cut_table(rank, multiplier, subset)
        elif kind == "perm":
            if mapping is None or len(mapping) != rank:
                raise ValueError("permutation automorphism needs images of e1..e<rank>")
            if sorted(abs(c) for c in mapping) != list(range(1, rank + 1)):
                raise ValueError("mapping is not a signed permutation")
            table = self._perm_table(rank, mapping)
        else:
            raise ValueError(f"unknown kind {kind!r}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "multiplier", multiplier)
        object.__setattr__(self, "subset", subset)
        object.__setattr__(self, "mapping", mapping)
        object.__setattr__(self, "_table", table)

    def __setattr__(self, name, value):
        raise AttributeError("WhiteheadAut is immutable")

    @staticmethod
    def _cut_table(rank: int, x: int, subset: frozenset[int]) -> Table:
        rows: list[tuple[int, ...]] = [()] * (2 * rank + 1)
        for c in _letters_in_order(rank):
            if c == x or c == -x:
                rows[c + rank] = (c,)
            else:
                prefix = (-x,) if -c in subset else ()
                suffix = (x,) if c in subset else ()
                rows[c + rank] = prefix + (c,) + suffix
        return tuple(rows)

    @staticmethod
    def _perm_table(rank: int, mapping: tuple[int, ...]) -> Table:
        rows: list[tuple[int, ...]] = [()] * (2 * rank + 1)
        for k in range(1, rank + 1):
            img = mapping[k - 1]
            rows[k + rank] = (img,)
            rows[-k + rank] = (-img,)
        return tuple(rows)

    @property
    def table(self) -> Table:
        return self._table

    def descriptor(self) -> dict:
        if self.kind == "cut":
            return {"kind": "cut", "rank": self.rank, "multiplier": self.multiplier,
                    "subset": sorted(self.subset, key=letter_key)}
        return {"kind": "perm", "rank": self.rank, "mapping": list(self.mapping)}

    @staticmethod
    def from_descriptor(d: dict) -> "WhiteheadAut":
        if d["kind"] == "cut":
            return WhiteheadAut(d["rank"], "cut", multiplier=d["multiplier"],
                                subset=frozenset(d["subset"]))
        return WhiteheadAut(d["rank"], "perm", mapping=tuple(d["mapping"]))

    def __eq__(self, other) -> bool:
        return (isinstance(other, WhiteheadAut)
                and self.descriptor() == other.descriptor())

    def __hash__(self) -> int:
        return hash(str(self.descriptor()))

    def __repr__(self) -> str:
        if self.kind == "cut":
            subset = " ".join(f"e{c}" if c > 0 else f"E{-c}"
                              for c in sorted(self.subset, key=letter_key))
            mult = f"e{self.multiplier}" if self.multiplier > 0 else f"E{-self.multiplier}"
            return f"WhiteheadAut(cut x={mult} S={{{subset}}})"
        return f"WhiteheadAut(perm {self.mapping})"


def enumerate_whitehead_autos(rank: int) -> Iterator[WhiteheadAut]:
    """Stream all cut-type automorphisms (identities removed) followed by the
    signed-permutation generators (inversions, then transpositions)."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    letters = _letters_in_order(rank)
    for x in letters:
        others = [c for c in letters if c != x and c != -x]
        for mask in range(1, 1 << len(others)):
            subset = frozenset([x] + [c for i, c in enumerate(others) if mask >> i & 1])
            yield WhiteheadAut(rank, "cut", multiplier=x, subset=subset)
    for k in range(1, rank + 1):
        mapping = tuple(-k if j == k else j for j in range(1, rank + 1))
        yield WhiteheadAut(rank, "perm", mapping=mapping)
    for i in range(1, rank + 1):
        for j in range(i + 1, rank + 1):
            mapping = tuple(j if t == i else i if t == j else t
                            for t in range(1, rank + 1))
            yield WhiteheadAut(rank, "perm", mapping=mapping)


def cut_type_count(rank: int) -> int:
    """Number of cut-type automorphisms after removing identities."""
    return 2 * rank * ((1 << (2 * rank - 2)) - 1)


def _check_rank(words: Sequence[Word], rank: int) -> None:
    for w in words:
        if w.max_index() > rank:
            raise RankMismatchError(
                f"word {w} uses index {w.max_index()} beyond rank {rank}")


def _apply_codes(table: Table, rank: int, codes: Sequence[int]) -> list[int]:
    out: list[int] = []
    for c in codes:
        for d in table[c + rank]:
            if out and out[-1] == -d:
                out.pop()
            else:
                out.append(d)
    return out


def apply(aut: WhiteheadAut, w: Word) -> Word:
    """Reduced image of w under the automorphism."""
    _check_rank([w], aut.rank)
    return Word(_apply_codes(aut.table, aut.rank, w.letters))


@dataclass(frozen=True)
class MinimizationTrace:
    """Audit trail of a greedy Whitehead descent."""

    start: tuple[Word, ...]
    end: tuple[Word, ...]
    automorphisms_applied: tuple[WhiteheadAut, ...]
    total_lengths: tuple[int, ...]

    @property
    def minimal_total(self) -> int:
        return self.total_lengths[-1]

    def to_dict(self) -> dict:
        return {
            "start": [str(w) for w in self.start],
            "end": [str(w) for w in self.end],
            "automorphisms": [a.descriptor() for a in self.automorphisms_applied],
            "total_lengths": list(self.total_lengths),
        }


def replay(trace: MinimizationTrace) -> tuple[Word, ...]:
    """Re-apply the recorded automorphisms to the start tuple."""
    current = trace.start
    for aut in trace.automorphisms_applied:
        current = tuple(apply(aut, w) for w in current)
    return current


def minimize(words: Sequence[Word], rank: int) -> MinimizationTrace:
    """Greedy descent to the minimal total length in the Aut(F_rank)-orbit.

    Each round scans every Whitehead automorphism and applies the one with
    the greatest strict length reduction (ties: first in enumeration order).
    At the stopping point no single automorphism shortens the tuple, which
    certifies minimality.  Descent stops early when the total reaches the
    arithmetic floor of one letter per word.
    """
    if not words:
        raise ValueError("minimize needs a nonempty tuple of words")
    _check_rank(words, rank)
    start = tuple(Word(w.letters) for w in words)
    current: list[tuple[int, ...]] = [w.letters for w in words]
    total = sum(len(c) for c in current)
    applied: list[WhiteheadAut] = []
    lengths = [total]
    floor = sum(1 for c in current if c)
    while total > floor:
        best_aut = None
        best_total = total
        for aut in enumerate_whitehead_autos(rank):
            table = aut.table
            cand = 0
            for codes in current:
                cand += len(_apply_codes(table, rank, codes))
                if cand >= best_total:
                    break
            if cand < best_total:
                best_total = cand
                best_aut = aut
        if best_aut is None:
            break
        current = [tuple(_apply_codes(best_aut.table, rank, codes)) for codes in current]
        total = best_total
        applied.append(best_aut)
        lengths.append(total)
    end = tuple(Word(codes) for codes in current)
    return MinimizationTrace(start=start, end=end,
                             automorphisms_applied=tuple(applied),
                             total_lengths=tuple(lengths))


def is_primitive(w: Word, rank: int) -> bool:
    """True iff w belongs to some basis of F_rank.

    The identity word is non-primitive by convention.
    """
    if not w:
        return False
    return minimize([w], rank).minimal_total == 1


def is_basis(words: Sequence[Word], rank: int) -> bool:
    """True iff the tuple is a basis of F_rank.

    A generating set of full size is a basis (free groups are Hopfian), so it
    suffices that the folded core is the one-vertex graph carrying every
    generator e1..e<rank> as a loop.
    """
    if len(words) != rank:
        return False
    core = build_core(words, ambient_rank=rank)
    if core.num_vertices != 1:
        return False
    loops = {abs(code) for code in core.adj[0]}
    return loops == set(range(1, rank + 1))


def is_free_factor_tuple(words: Sequence[Word], rank: int) -> bool:
    """True iff the subgroup generated by the tuple is a free factor of F_rank.

    The input is first normalised to a basis of the subgroup it generates;
    the tuple generates a free factor iff Whitehead descent carries it to a
    tuple of distinct basis letters (total length == tuple size).
    """
    _check_rank(words, rank)
    normalized = core_basis(build_core(words))
    if not normalized:
        return True
    trace = minimize(normalized, rank)
    if trace.minimal_total != len(normalized):
        return False
    indices = [w.letters[0] for w in trace.end]
    return len({abs(c) for c in indices}) == len(indices)

"""Constructive membership certificates for the co-word grammar.

A nontrivial word ``w`` is traced down the word-problem recursion until a
word with an odd number of a's appears.  That word is spelled by the seed
table; every level above it is then rebuilt with ``p* (h_L|h_R) u* t``:
``p`` marks erased syllables with ``δ``, ``h`` expands each symbol into the
syllable of the reduced word, ``u`` undoes the recorded reductions with ``#``
placeholders and ``t`` erases the placeholders.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from ..catalog import grigorchuk_coword_system
from ..errors import DomainError, WitnessConstructionError
from ..lsystem import DerivationWitness, sample_derivation, verify
from .words import PHI, check_word, in_seed_language, is_trivial, klein_product, nontrivial_branch
from .words import reduce, reduction_steps, syllables

DELTA = "δ"
HASH = "#"

Step = tuple[str, tuple[str, ...]]


def _seed_steps(w: str) -> list[Step]:
    steps = []
    parity = 0
    for i, x in enumerate(w):
        parity ^= x == "a"
        steps.append(("s", (*w[: i + 1], f"S{parity}")))
    steps.append(("s", tuple(w)))
    return steps


def _marking_steps(child: str, parts: list[str], side: str) -> list[Step]:
    """p-steps turning *child* into one symbol per syllable, δ where erased."""
    target = [DELTA if not PHI[side][s] else PHI[side][s] for s in parts]
    steps: list[Step] = []
    first = target[:-1] if target[-1] == DELTA else target
    if first != list(child):
        steps.append(("p", tuple(first)))
    if first is not target:
        steps.append(("p", tuple(target)))
    return steps


def _unreduction_steps(x: str, cap: int) -> list[Step]:
    """u-steps from ``reduce(x)`` to *x* with ``#`` placeholders inserted."""
    form = list(reduce(x))
    steps: list[Step] = []
    # letter_pos[i] is the index in form of the i-th letter
    for kind, index, factor in reversed(reduction_steps(x)):
        letter_pos = [j for j, sym in enumerate(form) if sym != HASH]
        if kind == "merge":
            j = letter_pos[index]
            if form[j] != klein_product(*factor):
                raise WitnessConstructionError(f"merge replay mismatch in {x!r}")
            form[j : j + 1] = [factor[0], HASH, factor[1]]
        else:
            lo = letter_pos[index - 1] + 1 if index > 0 else 0
            hi = letter_pos[index] if index < len(letter_pos) else len(form)
            gap = [j for j in range(lo, hi) if form[j] == HASH]
            if not gap:
                if index < len(letter_pos):
                    j = letter_pos[index]
                    form[j : j + 1] = [HASH, form[j]]
                    gap = [j]
                else:
                    j = letter_pos[index - 1]
                    form[j : j + 1] = [form[j], HASH]
                    gap = [j + 1]
                steps.append(("u", tuple(form)))
            j = gap[0]
            form[j : j + 1] = [factor[0], HASH, factor[1]]
        steps.append(("u", tuple(form)))
        if len(steps) > cap:
            raise WitnessConstructionError(f"u-step cap {cap} exceeded for {x!r}")
    return steps


def _derive(x: str) -> list[Step]:
    if in_seed_language(x):
        return _seed_steps(x)
    r = reduce(x)
    side, child = nontrivial_branch(r)
    steps = _derive(child)
    parts = syllables(r)
    steps += _marking_steps(child, parts, side)
    steps.append((f"h_{side}", tuple(r)))
    steps += _unreduction_steps(x, 4 * len(x))
    steps.append(("t", tuple(x)))
    return steps


def derive_witness(w: str) -> DerivationWitness:
    """A derivation of *w* in the co-word grammar; *w* must be nontrivial."""
    check_word(w)
    if is_trivial(w):
        raise DomainError(f"{w!r} represents the identity, so it has no derivation")
    return DerivationWitness(("S0",), tuple(_derive(w)), tuple(w))


@dataclass
class EquivalenceReport:
    max_len: int
    words: int = 0
    trivial: int = 0
    nontrivial: int = 0
    verified: int = 0
    failures: list[str] = field(default_factory=list)
    sampled: int = 0
    sampled_trivial: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.sampled_trivial and self.verified == self.nontrivial


def coword_language_equivalence(max_len: int, samples: int = 2000, seed: int = 0) -> EquivalenceReport:
    """Check the grammar against the word problem on all words up to *max_len*.

    Completeness is exact: every nontrivial word gets a witness that must
    verify.  Soundness is a spot check: *samples* random derivations of the
    grammar are drawn and none may produce a trivial word.
    """
    system = grigorchuk_coword_system()
    report = EquivalenceReport(max_len)
    for n in range(max_len + 1):
        for letters in itertools.product("abcd", repeat=n):
            w = "".join(letters)
            report.words += 1
            if is_trivial(w):
                report.trivial += 1
                continue
            report.nontrivial += 1
            try:
                ok = verify(derive_witness(w), system).ok
            except WitnessConstructionError:
                ok = False
            if ok:
                report.verified += 1
            else:
                report.failures.append(w)
    rng = random.Random(seed)
    for _ in range(samples):
        witness = sample_derivation(system, rng)
        if witness is None:
            continue
        report.sampled += 1
        word = "".join(witness.word)
        if is_trivial(word):
            report.sampled_trivial.append(word)
    return report

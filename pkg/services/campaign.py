"""Seeded random words and random-test campaigns."""

from __future__ import annotations

import logging
import time
from functools import lru_cache
from typing import Optional

import numpy as np

from errors import NoWitness, SearchBoundExceeded
from models import CampaignReport, GenKind
from services.codec import system_spec
from services.gauss import (
    conjugate_to_uhv,
    gauss_decompose,
    max_block_params,
    unitriangular5,
    verify_conjugation,
    verify_form,
)
from services.rings import Ring, RingElem, units
from services.rootsystem import RootSystem
from services.words import Generator, Word

logger = logging.getLogger(__name__)

# x/h/w mix of random words
KIND_WEIGHTS = ((GenKind.X, 0.8), (GenKind.H, 0.1), (GenKind.W, 0.1))
# parameters drawn over Z come from this window
INTEGER_WINDOW = 3


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@lru_cache(maxsize=None)
def _pools(ring: Ring) -> tuple[tuple[RingElem, ...], tuple[RingElem, ...]]:
    if ring.is_finite:
        return tuple(ring.elements()), tuple(units(ring))
    elems = tuple(ring(k) for k in range(-INTEGER_WINDOW, INTEGER_WINDOW + 1))
    return elems, tuple(x for x in elems if x.is_unit())


def random_word(rs: RootSystem, ring: Ring, rng: np.random.Generator, maxlen: int) -> Word:
    """A word of exactly ``maxlen`` generators; roots and parameters uniform."""
    elems, unit_pool = _pools(ring)
    kinds = [k for k, _ in KIND_WEIGHTS]
    weights = [w for _, w in KIND_WEIGHTS]
    gens = []
    for _ in range(maxlen):
        kind = kinds[rng.choice(len(kinds), p=weights)]
        root = int(rng.integers(len(rs.roots)))
        pool = elems if kind is GenKind.X else unit_pool
        gens.append(Generator(kind, root, pool[int(rng.integers(len(pool)))]))
    return Word(rs, ring, tuple(gens))


def run_trial(word: Word, bound: Optional[int], full: bool) -> tuple[bool, int]:
    """(passed, largest block) for one word."""
    form = gauss_decompose(word, bound)
    ok = verify_form(word, form)
    largest = max_block_params(form)
    if full:
        conj = conjugate_to_uhv(word, bound)
        ok = ok and verify_conjugation(word, *conj)
        unitri = unitriangular5(word, bound)
        ok = ok and verify_form(word, unitri)
        largest = max(largest, max_block_params(unitri))
    return ok, largest


def run_campaign(rs: RootSystem, ring: Ring, trials: int, maxlen: int, seed: int,
                 bound: Optional[int] = None, full: bool = False, timing: bool = False) -> CampaignReport:
    rng = make_rng(seed)
    started = time.perf_counter()
    failed = []
    largest = 0
    for trial in range(trials):
        word = random_word(rs, ring, rng, maxlen)
        try:
            ok, size = run_trial(word, bound, full)
        except (NoWitness, SearchBoundExceeded) as exc:
            logger.warning("trial %d has no decomposition: %s", trial, exc.message)
            ok, size = None, 0
        largest = max(largest, size)
        if ok is False:
            logger.warning("trial %d failed oracle verification", trial)
        if not ok:
            failed.append(trial)
        if (trial + 1) % 10 == 0:
            logger.info("%s over %s: %d/%d trials done", rs.name, ring.descriptor, trial + 1, trials)
    elapsed = int((time.perf_counter() - started) * 1000)
    return CampaignReport(
        system=system_spec(rs),
        ring=ring.descriptor,
        seed=seed,
        trials=trials,
        failures=len(failed),
        max_block_params=largest,
        failed_trials=failed,
        elapsed_ms=elapsed if timing else None,
    )

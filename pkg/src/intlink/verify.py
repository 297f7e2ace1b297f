"""Parity harnesses: double-point parity, linking-parity audits, linkless checks.

Every harness is deterministic given its inputs and seed, and reports carry a
fingerprint of the coordinate data so archived output is self-identifying.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .complexes import standard_complex
from .errors import DegeneracyError, PreconditionError, SamplingError
from .geometry import (
    _gp_fast,
    double_point_set,
    is_linear_embedding,
    iter_complementary_pairs,
    lk2,
    mix_seed,
    sample_config,
)
from .spheres import canonical_pairs, enumerate_sphere_pairs

PARENT_OF = {"N1": "SIGMA", "N2": "JOIN3", "N3": "SIGMA", "SIGMA": "SIGMA", "JOIN3": "JOIN3"}

DISTINGUISHED_VERTEX = {"N1": "a0", "N2": "a0^0"}


@dataclass
class PairEntry:
    gamma: str
    gamma_prime: str
    bit: int


@dataclass
class ParityReport:
    """Per-pair parity ledger with mod-2 total and witness list."""

    subject: str
    n: int
    d: int
    config_hash: str
    pairs: list = field(default_factory=list)
    total_mod2: int = 0
    witnesses: list = field(default_factory=list)
    status: str = "PASS"

    @property
    def passed(self):
        return self.status == "PASS"

    def to_json_dict(self):
        return {
            "subject": self.subject,
            "n": self.n,
            "d": self.d,
            "config_hash": self.config_hash,
            "pairs": [
                {"gamma": p.gamma, "gamma_prime": p.gamma_prime, "bit": p.bit}
                for p in self.pairs
            ],
            "total_mod2": self.total_mod2,
            "witnesses": list(self.witnesses),
            "status": self.status,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self):
        lines = [
            f"subject {self.subject} n={self.n} d={self.d} "
            f"config={self.config_hash[:12]} status={self.status} "
            f"total_mod2={self.total_mod2}"
        ]
        for i, p in enumerate(self.pairs):
            lines.append(
                f"pair {i}: gamma={{{p.gamma}}} gamma'={{{p.gamma_prime}}} bit={p.bit}"
            )
        lines.append("witnesses: " + (" ".join(str(w) for w in self.witnesses) or "-"))
        return "\n".join(lines) + "\n"


def _finish(report):
    report.total_mod2 = 0
    for p in report.pairs:
        report.total_mod2 ^= p.bit
    report.witnesses = [i for i, p in enumerate(report.pairs) if p.bit == 1]
    report.status = "PASS" if report.total_mod2 == 1 else "FAIL"
    return report


def _simplex_str(labels):
    return " ".join(labels)


def _witness_str(w):
    return "; ".join(w.facet_strings())


def vkf_parity(name, n, cfg):
    """Double-point parity of a generic vertex-linear image of SIGMA or JOIN3.

    The ledger covers every vertex-disjoint pair of top simplices; the total
    is 1 mod 2 for every generic map of these two complexes.
    """
    if name not in ("SIGMA", "JOIN3"):
        raise ValueError(f"parity subjects are SIGMA and JOIN3, got {name!r}")
    K = standard_complex(name, n)
    if cfg.d != 2 * n:
        raise PreconditionError(f"need d = 2n = {2 * n}, config has d = {cfg.d}")
    if not _gp_fast(cfg.points(K.labels), cfg.d):
        raise PreconditionError("configuration is not in general position")
    report = ParityReport(subject=K.name, n=n, d=cfg.d, config_hash=cfg.fingerprint())
    try:
        for s, t, res in iter_complementary_pairs(K, cfg):
            if res.kind == "degenerate":
                raise DegeneracyError(
                    f"degenerate pair {s} / {t} ({res.reason})", context=(s, t)
                )
            report.pairs.append(
                PairEntry(_simplex_str(s), _simplex_str(t), 1 if res.is_interior else 0)
            )
    except DegeneracyError:
        report.pairs = []
        report.status = "DEGENERATE"
        return report
    return _finish(report)


def linking_parity_audit(name, n, cfg, seed=0):
    """Sum of linking numbers over the canonical sphere pairs of N1/N2/N3.

    Requires cfg to embed the complex.  For every embedding the total is odd,
    so the witness list is nonempty whenever the report passes.
    """
    K = standard_complex(name, n)
    if not is_linear_embedding(K, cfg):
        raise PreconditionError(f"configuration does not embed {K.name}")
    pairs = canonical_pairs(name, n)
    report = ParityReport(subject=K.name, n=n, d=cfg.d, config_hash=cfg.fingerprint())
    try:
        for k, pair in enumerate(pairs):
            bit = lk2(pair.gamma, pair.gamma_prime, cfg, apex_seed=mix_seed(seed, k))
            report.pairs.append(
                PairEntry(_witness_str(pair.gamma), _witness_str(pair.gamma_prime), bit)
            )
    except DegeneracyError:
        report.pairs = []
        report.status = "DEGENERATE"
        return report
    return _finish(report)


def extension_crosscheck(name, n, cfg, seed=0, apexes=3):
    """Consistency of coning against the straight extension of deleted simplices.

    For each canonical pair whose small sphere is the boundary of a simplex s
    of the parent complex, the cone from the image of a vertex of s is the
    straight simplex image itself, so linking numbers may be computed two
    ways: with that forced apex and with independent random apexes.  Returns
    True iff all values agree for every pair and the pair-sum equals the
    double-point parity of the parent complex drawn on the same coordinates.
    """
    if name not in ("N1", "N2", "N3"):
        raise ValueError(f"crosscheck subjects are N1, N2, N3, got {name!r}")
    K = standard_complex(name, n)
    if not is_linear_embedding(K, cfg):
        raise PreconditionError(f"configuration does not embed {K.name}")
    pairs = canonical_pairs(name, n)
    total = 0
    for k, pair in enumerate(pairs):
        s = pair.gamma.shape.simplex
        anchor = DISTINGUISHED_VERTEX.get(name, s[0])
        if anchor not in s:
            raise ValueError(f"distinguished vertex {anchor} not in {s}")
        forced = lk2(pair.gamma, pair.gamma_prime, cfg, apex=cfg.point(anchor))
        for i in range(apexes):
            bit = lk2(
                pair.gamma,
                pair.gamma_prime,
                cfg,
                apex_seed=mix_seed(seed, k, i + 1),
            )
            if bit != forced:
                return False
        total ^= forced
    parent = standard_complex(PARENT_OF[name], n)
    crossings = double_point_set(parent, cfg)
    return total == len(crossings) % 2


def linkless_verify(N, n, cfg, seed=0, pairs=None):
    """True iff cfg embeds N with every disjoint (n-1, n) sphere pair unlinked.

    `pairs` may be precomputed (linkless_search reuses one enumeration);
    otherwise they are enumerated blindly, which needs n <= 2.
    """
    if pairs is None:
        pairs = enumerate_sphere_pairs(N, n - 1, n)
    try:
        if not is_linear_embedding(N, cfg):
            return False
    except DegeneracyError:
        return False
    for k, pair in enumerate(pairs):
        if lk2(pair.gamma, pair.gamma_prime, cfg, apex_seed=mix_seed(seed, k)) == 1:
            return False
    return True


@dataclass
class SearchStats:
    attempts: int = 0
    sampling_failures: int = 0
    embedding_failures: int = 0
    linking_failures: int = 0
    degenerate_failures: int = 0

    def to_json_dict(self):
        return {
            "attempts": self.attempts,
            "sampling_failures": self.sampling_failures,
            "embedding_failures": self.embedding_failures,
            "linking_failures": self.linking_failures,
            "degenerate_failures": self.degenerate_failures,
        }


def linkless_search(N, n, seed, restarts, bound):
    """Randomized search for a link-trivial embedding of N, with exact
    verification of every candidate.  Returns (config or None, stats)."""
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    pairs = enumerate_sphere_pairs(N, n - 1, n)
    stats = SearchStats()
    for r in range(restarts):
        stats.attempts += 1
        try:
            cfg = sample_config(mix_seed(seed, r), 2 * n, N.labels, bound)
        except SamplingError:
            stats.sampling_failures += 1
            continue
        try:
            if not is_linear_embedding(N, cfg):
                stats.embedding_failures += 1
                continue
        except DegeneracyError:
            stats.degenerate_failures += 1
            continue
        try:
            ok = True
            for k, pair in enumerate(pairs):
                if lk2(pair.gamma, pair.gamma_prime, cfg, apex_seed=mix_seed(seed, r, k)) == 1:
                    ok = False
                    break
        except DegeneracyError:
            stats.degenerate_failures += 1
            continue
        if ok:
            return cfg, stats
        stats.linking_failures += 1
    return None, stats

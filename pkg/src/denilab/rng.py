"""Deterministic, label-derived random streams.

All randomness in this package flows through streams derived from a
(seed, label) pair. Derivation is pure: the same pair always yields the
same stream, on any platform, in any process. The underlying generator
is counter-based (Philox), so draws do not depend on global state.

Conventional labels: "init" for parameter initialisation, "data_order"
for batch shuffling, "model_noise" for dropout masks, and
"mitigation_noise" for strategy-injected noise. Ensemble members get a
":member:<k>" suffix via :func:`member_label`; member 0 is the base
model and keeps the unsuffixed label.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np


def derive_stream(seed: int, label: str) -> "RngStream":
    """Derive an independent stream for (seed, label).

    The Philox key is the first 128 bits of SHA-256 over the pair, so
    distinct labels give statistically independent streams and the
    mapping is stable across platforms and process restarts.
    """
    if not label:
        raise ValueError("stream label must be a non-empty string")
    digest = hashlib.sha256(f"{seed}\x1f{label}".encode("utf-8")).digest()
    key = np.frombuffer(digest[:16], dtype=np.uint64)
    return RngStream(seed=seed, label=label, _gen=np.random.Generator(np.random.Philox(key=key)))


def member_label(base: str, member: int) -> str:
    """Label for an ensemble member's stream. Member 0 is the base model."""
    if member < 0:
        raise ValueError("member index must be non-negative")
    return base if member == 0 else f"{base}:member:{member}"


@dataclass
class RngStream:
    """A stateful random stream owned by a single logical consumer.

    Never share one stream between consumers; derive a fresh one per
    use. Sharing would make draw order (and therefore results) depend
    on interleaving.
    """

    seed: int
    label: str
    _gen: np.random.Generator = field(repr=False)

    def normal(self, shape: tuple[int, ...] | int | None = None, std: float = 1.0) -> np.ndarray:
        return self._gen.normal(0.0, std, size=shape)

    def uniform(self, shape: tuple[int, ...] | int | None = None) -> np.ndarray:
        return self._gen.random(size=shape)

    def integers(self, low: int, high: int, shape: tuple[int, ...] | int | None = None) -> np.ndarray:
        return self._gen.integers(low, high, size=shape)

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)

    def bernoulli(self, p: float, shape: tuple[int, ...]) -> np.ndarray:
        """0/1 float mask with P(1) = p."""
        return (self._gen.random(size=shape) < p).astype(np.float64)

    @property
    def counter(self) -> int:
        """Low word of the Philox counter (number of 256-bit blocks consumed)."""
        return int(self._gen.bit_generator.state["state"]["counter"][0])

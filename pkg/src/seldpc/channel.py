"""BI-AWGN link model and relay-channel parameterization.

One SNR convention everywhere: Es/N0 per BPSK dimension, with unit-energy
symbols and per-dimension noise variance sigma^2, so SNR(dB) =
-10 log10(2 sigma^2).  QPSK links are two independent BPSK uses under Gray
mapping and report the same per-dimension figure.
"""

import math
import warnings

import numpy as np


def snr_db_from_sigma(sigma):
    """Es/N0 in dB for noise standard deviation sigma."""
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    return -10.0 * math.log10(2.0 * sigma * sigma)


def sigma_from_snr_db(snr_db):
    """Inverse of snr_db_from_sigma."""
    return math.sqrt(0.5 * 10.0 ** (-snr_db / 10.0))


def discrepancy_db(delta):
    """Delta in dB: 20 log10(delta); SNR_RD = SNR_SD + Delta."""
    if delta < 1.0:
        raise ValueError("discrepancy delta must be >= 1")
    return 20.0 * math.log10(delta)


def delta_from_discrepancy_db(delta_db):
    return 10.0 ** (delta_db / 20.0)


class RelayChannelParams:
    """Noise standard deviations of the three links.

    delta = sigma_sd / sigma_rd is the channel discrepancy and sigma =
    sigma_rd the noise parameter.  The degraded-channel assumption
    (sigma_sr < sigma_sd and sigma_rd < sigma_sd) is checked with a warning,
    not an error.
    """

    def __init__(self, sigma_sr, sigma_sd, sigma_rd):
        if min(sigma_sr, sigma_sd, sigma_rd) <= 0:
            raise ValueError("noise standard deviations must be positive")
        self.sigma_sr = float(sigma_sr)
        self.sigma_sd = float(sigma_sd)
        self.sigma_rd = float(sigma_rd)
        if not (sigma_sr < sigma_sd and sigma_rd < sigma_sd):
            warnings.warn("relay channel is not degraded "
                          f"(sigma_sr={sigma_sr}, sigma_sd={sigma_sd}, sigma_rd={sigma_rd})",
                          stacklevel=2)

    @classmethod
    def from_snr_db(cls, snr_sr_db, snr_sd_db, snr_rd_db):
        return cls(sigma_from_snr_db(snr_sr_db),
                   sigma_from_snr_db(snr_sd_db),
                   sigma_from_snr_db(snr_rd_db))

    @property
    def sigma(self):
        return self.sigma_rd

    @property
    def delta(self):
        return self.sigma_sd / self.sigma_rd

    def __repr__(self):
        return (f"RelayChannelParams(sigma_sr={self.sigma_sr:.4f}, "
                f"sigma_sd={self.sigma_sd:.4f}, sigma_rd={self.sigma_rd:.4f})")


def transmit(bits, sigma, rng):
    """BPSK (0 -> +1, 1 -> -1) over AWGN; returns channel LLRs 2 y / sigma^2.

    Positive LLR favours bit 0.  `bits` may be a vector or a (frames, n)
    batch.  Deterministic given the generator state.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    bits = np.asarray(bits)
    symbols = 1.0 - 2.0 * bits.astype(np.float64)
    y = symbols + sigma * rng.standard_normal(bits.shape)
    return 2.0 * y / (sigma * sigma)

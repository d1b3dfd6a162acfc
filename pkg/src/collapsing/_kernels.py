"""Compiled inner loops for the exhaustive sweeps.

Automata are described by indices into a table of maps; every map is
represented by its subset-image table ``img[m, S] = bitmask of S·m``.
"""
from __future__ import annotations

import itertools

import numba as nb
import numpy as np


def all_maps(n: int) -> np.ndarray:
    """All n**n self-maps of ``0..n-1`` in lexicographic order."""
    return np.array(list(itertools.product(range(n), repeat=n)), dtype=np.int8).reshape(-1, n)


@nb.njit(cache=True)
def image_table(maps):
    count, n = maps.shape
    table = np.zeros((count, 1 << n), dtype=np.uint8)
    for m in range(count):
        for s in range(1 << n):
            img = 0
            for q in range(n):
                if s >> q & 1:
                    img |= 1 << maps[m, q]
            table[m, s] = img
    return table


@nb.njit(cache=True)
def _popcounts(size):
    out = np.zeros(size, dtype=np.int8)
    for s in range(size):
        c = 0
        x = s
        while x:
            c += x & 1
            x >>= 1
        out[s] = c
    return out


@nb.njit(cache=True)
def shortest_lengths(img, ia, ib, n, k):
    """Length of a shortest k-compressing word for each pair ``(ia[i], ib[j])``.

    Returns an int16 matrix of shape ``(len(ia), len(ib))``; 0 means the
    automaton is not k-compressible.
    """
    size = 1 << n
    full = size - 1
    pop = _popcounts(size)
    limit = n - k
    out = np.zeros((ia.shape[0], ib.shape[0]), dtype=np.int16)
    dist = np.zeros(size, dtype=np.int16)
    stamp = np.zeros(size, dtype=np.int64)
    queue = np.zeros(size, dtype=np.int64)
    tick = 0
    for i in range(ia.shape[0]):
        ta = img[ia[i]]
        for j in range(ib.shape[0]):
            tb = img[ib[j]]
            tick += 1
            stamp[full] = tick
            dist[full] = 0
            queue[0] = full
            head = 0
            tail = 1
            found = 0
            while head < tail and found == 0:
                s = queue[head]
                head += 1
                d = dist[s] + 1
                for letter in range(2):
                    t = ta[s] if letter == 0 else tb[s]
                    if pop[t] <= limit:
                        found = d
                        break
                    if stamp[t] != tick:
                        stamp[t] = tick
                        dist[t] = d
                        queue[tail] = t
                        tail += 1
            out[i, j] = found
    return out


@nb.njit(cache=True)
def word_images(img, ia, ib, word):
    """Bitmask of ``Q·word`` for each pair; ``word`` holds 0 for a, 1 for b."""
    full = img.shape[1] - 1
    out = np.zeros((ia.shape[0], ib.shape[0]), dtype=np.uint8)
    for i in range(ia.shape[0]):
        ta = img[ia[i]]
        for j in range(ib.shape[0]):
            tb = img[ib[j]]
            s = full
            for c in word:
                s = ta[s] if c == 0 else tb[s]
            out[i, j] = s
    return out


def encode_word(w: str) -> np.ndarray:
    return np.array([0 if c == "a" else 1 for c in w], dtype=np.int8)


def popcount(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.int64)
    count = np.zeros_like(x)
    while np.any(x):
        count += x & 1
        x >>= 1
    return count

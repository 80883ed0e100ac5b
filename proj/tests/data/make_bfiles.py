"""Regenerates the b-files in this directory by brute force over Catalan words.

Independent of the C++ library: statistics are recomputed here from their
word definitions and indexed the way OEIS indexes each sequence.
"""

import os


def catalan_words(n):
    if n == 0:
        yield ()
        return
    stack = [(1,)]
    while stack:
        w = stack.pop()
        if len(w) == n:
            yield w
            continue
        for a in range(w[-1] + 1, 0, -1):
            stack.append(w + (a,))


def sym_peaks(w):
    # factors a (a+1)^l a, l >= 1
    count = 0
    for i in range(len(w)):
        j = i + 1
        while j < len(w) and w[j] == w[i] + 1:
            j += 1
            if j < len(w) and w[j] == w[i]:
                count += 1
    return count


def runs(w, keep):
    if not w:
        return 0
    return 1 + sum(1 for x, y in zip(w, w[1:]) if not keep(x, y))


def corner_hu(w):
    return sum(1 for x, y in zip(w, w[1:]) if y > x)


def corner_dh(w):
    return sum(1 for x, y in zip(w, w[1:]) if y < x)


def semi(w):
    perimeter = 2 * len(w) + w[0] + w[-1] + sum(abs(y - x) for x, y in zip(w, w[1:]))
    return perimeter // 2


SEQUENCES = {
    # id: (statistic, first n, OEIS index of that n)
    "A057552": (sym_peaks, 3, 0),
    "A051924": (lambda w: runs(w, lambda x, y: y < x), 1, 1),
    "A000984": (lambda w: runs(w, lambda x, y: y >= x), 1, 0),
    "A002054": (corner_hu, 2, 1),
    "A002694": (corner_dh, 3, 2),
    "A097613": (semi, 1, 1),
    "A000346": (sum, 1, 0),
}

N_MAX = 12


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    for sid, (stat, first, oeis_first) in SEQUENCES.items():
        with open(os.path.join(here, "b" + sid[1:] + ".txt"), "w") as f:
            f.write("# %s, brute force over Catalan words n=%d..%d\n" % (sid, first, N_MAX))
            for n in range(first, N_MAX + 1):
                total = sum(stat(w) for w in catalan_words(n))
                f.write("%d %d\n" % (n - first + oeis_first, total))


if __name__ == "__main__":
    main()

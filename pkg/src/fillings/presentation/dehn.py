from dataclasses import dataclass

from ..dps import ApplyRelator, FreeReduce, NullSequence


@dataclass
class DehnResult:
    trivial: bool
    sequence: NullSequence
    final: str

    @property
    def decision(self):
        return "Trivial" if self.trivial else "Stuck"

    @property
    def replacements(self):
        return self.sequence.relator_count()


def _shortening_table(closure):
    # prefix u of a closure word u v^-1 with len(v) < len(u) -> (word, cut)
    table = {}
    for c in sorted(closure):
        for k in range(len(c) // 2 + 1, len(c) + 1):
            table.setdefault(c[:k], (c, k))
    return table


def dehn_algorithm(w, p):
    """Free-reduce, then replace a subword u of some closure word u v^-1 by
    the shorter v; repeat.  Every round shortens the word, so this stops
    after at most len(w) rounds, at the empty word or stuck."""
    table = _shortening_table(p.closure)
    lengths = sorted({len(u) for u in table}, reverse=True)
    moves = []
    cur = w
    while True:
        # leftmost free reductions, recorded one at a time
        while True:
            i = next((j for j in range(len(cur) - 1) if cur[j] == cur[j + 1].swapcase()), None)
            if i is None:
                break
            moves.append(FreeReduce(i))
            cur = cur[:i] + cur[i + 2:]
        if cur == "":
            return DehnResult(True, NullSequence(w, moves), cur)
        move = _find_shortening(cur, table, lengths)
        if move is None:
            return DehnResult(False, NullSequence(w, moves), cur)
        moves.append(move)
        cur = move.apply(cur)


def _find_shortening(w, table, lengths):
    for i in range(len(w)):
        for n in lengths:
            hit = table.get(w[i:i + n]) if i + n <= len(w) else None
            if hit is not None:
                return ApplyRelator(hit[0], i, hit[1])
    return None

"""Regenerates crates/core/data/catalog.json from explicit block lists and
difference sets. Every entry is re-verified here and again by the library on load."""
import itertools, json, sys
from collections import Counter

def params(n, blocks):
    k = len(blocks[0])
    assert all(len(b) == k and len(set(b)) == k for b in blocks)
    rep = Counter(x for b in blocks for x in b)
    pairs = Counter(p for b in blocks for p in itertools.combinations(sorted(b), 2))
    assert len(rep) == n and len(set(rep.values())) == 1, "replication"
    assert len(pairs) == n * (n - 1) // 2 and len(set(pairs.values())) == 1, "pairs"
    return dict(b=len(blocks), n=n, r=rep[0], k=k, **{"lambda": pairs[(0, 1)]})

def canon(blocks):
    return sorted(sorted(b) for b in blocks)

def develop(mods, base):
    elems = list(itertools.product(*[range(m) for m in mods]))
    idx = {e: i for i, e in enumerate(elems)}
    out = []
    for g in elems:
        out.append([idx[tuple((a + b) % m for a, b, m in zip(x, g, mods))] for x in base])
    return len(elems), out

def one_based(blocks):
    return [[x - 1 for x in b] for b in blocks]

entries = []
def add(name, n, blocks):
    blocks = canon(blocks)
    entries.append(dict(name=name, params=params(n, blocks), ground_size=n, blocks=blocks))

add("twofold-triple-6", 6, one_based([[1,2,4],[1,2,3],[3,4,5],[2,4,5],[2,5,6],[1,5,6],[2,3,6],[1,3,5],[1,4,6],[3,4,6]]))
add("fano-7", 7, one_based([[1,2,4],[2,3,5],[3,4,6],[4,5,7],[1,5,6],[2,6,7],[1,3,7]]))
add("biplane-7", 7, one_based([[1,2,3,4],[1,3,5,7],[1,4,5,6],[1,2,6,7],[2,3,5,6],[2,4,5,7],[3,4,6,7]]))
add("symmetric-5-4-3", 5, [list(c) for c in itertools.combinations(range(5), 4)])
v, b = develop((11,), [(1,), (3,), (4,), (5,), (9,)]); add("biplane-11", v, b)
add("symmetric-11-6-3", 11, [[x for x in range(11) if x not in blk] for blk in b])
v, b = develop((15,), [(x,) for x in [0, 1, 2, 4, 5, 8, 10]]); add("symmetric-15-7-3", v, b)
v, b = develop((4, 4), [(0,0),(0,1),(0,2),(1,0),(2,1),(3,2)]); add("biplane-16", v, b)
v, b = develop((37,), [(x,) for x in [0, 1, 3, 7, 17, 24, 25, 29, 35]]); add("biplane-37", v, b)
v, b = develop((3, 15), [(0,0),(0,1),(0,2),(0,3),(0,5),(0,10),(1,1),(1,7),(1,13),(2,1),(2,8),(2,12)]); add("symmetric-45-12-3", v, b)

for extra in sys.argv[1:]:
    for e in json.load(open(extra)):
        add(e["name"], e["ground_size"], e["blocks"])

doc = dict(version=1, entries=entries)
lines = ['{', '  "version": 1,', '  "entries": [']
for i, e in enumerate(entries):
    lines.append('    {')
    lines.append(f'      "name": {json.dumps(e["name"])},')
    lines.append(f'      "params": {json.dumps(e["params"])},')
    lines.append(f'      "ground_size": {e["ground_size"]},')
    lines.append('      "blocks": [')
    for j, blk in enumerate(e["blocks"]):
        lines.append('        ' + json.dumps(blk) + (',' if j + 1 < len(e["blocks"]) else ''))
    lines.append('      ]')
    lines.append('    }' + (',' if i + 1 < len(entries) else ''))
lines += ['  ]', '}']
print('\n'.join(lines))

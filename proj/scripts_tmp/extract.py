#!/usr/bin/env python3
# One-time extraction of data tables from paper.md into C++ headers.
# Not part of the deliverable; deleted after use.
import re, sys

src = open('/root/proj/paper.md').read()

# ---------------- coordinates ----------------
# rows look like:  & $F_{34}$ &$\frac{1}{2}(\phi^{-1},~~0,~~1,~~\phi)$\\
# or:              1 & $F_1$ &(1, 0, 0, 0)   \\
coord_re = re.compile(r'\$F_\{?(\d+)\}?\s*\$\s*&\s*(\$?)(\\frac\{1\}\{2\})?\(([^)]*)\)')
tokmap = {
    '0': (0,1,0,1), '1': (1,1,0,1), '-1': (-1,1,0,1),
    # phi = (1+sqrt5)/2 ; phi^{-1} = (-1+sqrt5)/2
    'phi': (1,2,1,2), '-phi': (-1,2,-1,2),
    'phiinv': (-1,2,1,2), '-phiinv': (1,2,-1,2),
}
def parse_tok(t):
    t = t.strip().replace('~','').replace(' ','')
    t = t.replace('\\phi^{-1}','phiinv').replace('\\phi','phi')
    if t not in tokmap:
        raise ValueError(f'bad token {t!r}')
    return tokmap[t]

centers = {}
for m in coord_re.finditer(src):
    idx = int(m.group(1))
    half = m.group(3) is not None
    toks = m.group(4).split(',')
    assert len(toks) == 4, (idx, toks)
    comps = []
    for t in toks:
        a_n,a_d,b_n,b_d = parse_tok(t)
        if half:
            a_d *= 2; b_d *= 2
        comps.append((a_n,a_d,b_n,b_d))
    if idx in centers:
        assert centers[idx]==comps, f'dup {idx} differs'
    centers[idx] = comps

assert sorted(centers) == list(range(1,121)), f'got {len(centers)} centers'

with open('/root/proj/include/smallcover/center_table.hpp','w') as f:
    f.write('''#pragma once

// Facet-center coordinates of the right-angled 120-cell, one row per facet
// in the census label order.  Each component is a + b*sqrt(5) stored as
// {a_num, a_den, b_num, b_den}; the centers are unit quaternions (w,x,y,z).

namespace smallcover::detail {

inline constexpr int kCenterTable[120][4][4] = {
''')
    for i in range(1,121):
        row = centers[i]
        cells = ', '.join('{%d, %d, %d, %d}' % c for c in row)
        f.write('    {%s},\n' % cells)
    f.write('''};

}  // namespace smallcover::detail
''')
print('centers ok')

# ---------------- block rows b1..b45 ----------------
# rows look like: 2	&	1	2	3	4	8	10	12	\textbf{14	18	26	28	30	34}
rows = {}
a = src.index('No. & No. of adjacent facets')
b = src.index('label{table:all2}')
for ln in src[a:b].splitlines():
    if '&' not in ln or 'No.' in ln:
        continue
    body = ln.replace('\\textbf{','').replace('}','').replace('\\hline','')
    nums = [int(x) for x in re.findall(r'\d+', body)]
    if len(nums) == 14:
        rid = nums[0]
        block = nums[1:]
        assert block == sorted(block), (rid, block)
        assert rid not in rows
        rows[rid] = block
assert sorted(rows) == list(range(1,46)), f'blocks got {sorted(rows)}'
with open('/root/proj/tests/block_rows.hpp','w') as f:
    f.write('''#pragma once

// First 45 facet blocks (facet plus its 12 neighbours, sorted) of the
// 120-cell in census label order; golden data for adjacency checks.

inline constexpr int kBlockRows[45][13] = {
''')
    for i in range(1,46):
        f.write('    {%s},\n' % ', '.join(map(str, rows[i])))
    f.write('};\n')
print('blocks ok')

# also show the paper's selected transfer permutations (first 13 cols, rows 1..13)
ta = src.index('label{table:per}')
seg = src[src.index('table}{c|P{0.7cm}'):ta] if 'table}{c|P{0.7cm}' in src[:ta] else src[max(0,ta-4000):ta]
for m in re.finditer(r'\\textbf\{(\d+)\}&([0-9 &]+)', seg):
    nums = [int(x) for x in re.findall(r'\d+', m.group(2))]
    if len(nums) == 13:
        print('paper transfer row', m.group(1), nums)

# ---------------- result vectors ----------------
hex40 = re.compile(r'[0-9a-f]{40}')

def tokens_between(start_marker, end_marker):
    a = src.index(start_marker)
    b = src.index(end_marker, a)
    return hex40.findall(src[a:b])

ori_tokens = tokens_between('label{table:ori}', 'label{table:nonori}')
assert len(ori_tokens) % 6 == 0, len(ori_tokens)
ori = []
for i in range(0, len(ori_tokens), 6):
    a1,b1,a2,b2,a3,b3 = ori_tokens[i:i+6]
    ori.append(a1+a2+a3)
    ori.append(b1+b2+b3)
assert len(ori) == 56, len(ori)

non_and_5 = tokens_between('label{table:nonori}', 'label{table:5col}')
assert len(non_and_5) == 9, len(non_and_5)
v57 = non_and_5[0]+non_and_5[2]+non_and_5[4]
v58 = non_and_5[1]+non_and_5[3]+non_and_5[5]
v59 = ''.join(non_and_5[6:9])

col9_tokens = tokens_between('label{table:5col}', 'label{table:9col}')
assert len(col9_tokens) == 3
v60 = ''.join(col9_tokens)

allv = ori + [v57, v58, v59, v60]
assert all(len(v)==120 for v in allv)
dups = {}
for i,v in enumerate(allv):
    dups.setdefault(v, []).append(i+1)
print('duplicate rows:', {k[:12]: v for k,v in dups.items() if len(v)>1})
print('distinct orientable rows:', len(set(ori)))

with open('/root/proj/tests/reference_vectors.hpp','w') as f:
    f.write('''#pragma once

// Reference characteristic vectors for the 120-cell census (hex encoding,
// one character per facet).  Entries 1..56 are the orientable class
// representatives, 57..58 the non-orientable eight-colouring ones, 59 the
// five-colouring vector and 60 the nine-colouring vector.

inline constexpr const char* kReferenceVectors[60] = {
''')
    for v in allv:
        f.write('    "%s",\n' % v)
    f.write('};\n')
print('vectors ok')

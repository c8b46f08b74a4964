"""Golden command lines: argv, exit status and exact standard output."""

CASES = [
    (['eval', '--stream', '+(-)', '--digits', '10'], 0, '1/2^10 ± 1/1024\nexact: 0\n'),
    (['eval', '--stream', '(+-)', '--digits', '4'], 0, '5/2^4 ± 1/16\nexact: 1/3\n'),
    (['eval', '--stream', '+0(-)', '--digits', '2'], 0, '1/2^1 ± 1/4\nexact: 1/4\n'),
    (['midpoint', '+(+)', '-(-)', '--digits', '8'], 0, '(0)\n0 ± 1/256\nexact: 0\n'),
    (['midpoint', '+(-)', '(+)', '--digits', '3'], 0, '+(0)\n1/2^1 ± 1/8\nexact: 1/2\n'),
    (['half', '(+)', '--digits', '3'], 0, '+-(+)\n3/2^3 ± 1/8\nexact: 1/2\n'),
    (['half', '-(+-)', '--digits', '2'], 0, '-+(+-)\n-1/2^2 ± 1/4\nexact: -1/6\n'),
    (['relate', '--op', 'lt', '-+', '+'], 0, 'true\n'),
    (['relate', '--op', 'lexl', '+', '-'], 0, 'false\n'),
    (['relate', '--op', 'lexu', '-+-', '-+'], 0, 'true\n'),
    (['relate', '--op', 'overlap', '-+', '+-'], 0, 'true\n'),
    (['relate', '--op', 'lmid', '_', '+-'], 0, 'false\n'),
    (['relate', '--op', 'midl', '+--', '+'], 0, 'true\n'),
    (['open', 'up', '+-'], 0, '{+-}\n'),
    (['open', 'rhook', '-+-'], 0, '{+,-+}\n'),
    (['open', 'lhook', '+-+'], 0, '{-,+-}\n'),
    (['open', 'pair', 'bot', '+-'], 0, '{+}\n'),
    (['cstar', '--interval', '(0,1]', '--depth', '1'], 0, '{++,+-+}\n'),
    (['cstar', '--interval', '[-1,-1/4) u (1/4,1]', '--depth', '0', '--member', '++', '--member', '+-'], 0, '{--,++,-+--,+-++}\n++: true\n+-: false\n'),
    (['forallc', '-+-', '+-+'], 0, '[-1,-1/4) u (1/4,1]\n'),
    (['forallc', 'bot', '+-'], 0, '(0,1]\n'),
    (['iterate', '--stream', '(+)', '--n', '3'], 0, '7/2^3 ± 1/8\n'),
    (['iterate', '--stream', '+(-)', '--n', '3', '--endpoints', '0', '1/2', '--chain'], 0, '0: 0 ± 1\n1: 1/2^2 ± 1/2\n2: 1/2^2 ± 1/4\n3: 1/2^2 ± 1/8\n'),
    (['coeq', '--check', '{+-,-+}'], 0, 'false\nwitness: -\n'),
    (['coeq', '--check', '{_}'], 0, 'true\n'),
    (['coeq', '--depth', '3'], 0, '{}\n{_}\n'),
    (['factor', '--interval', '(0,1]', '--word', '++', '--depth', '2'], 0, '(3/8,1]\n'),
    (['factor', '--interval', '[-1,0) u (0,1]', '--depth', '3'], 0, 'factorization of c*([-1,0) u (0,1]) (depth 3): ok (20 checks, 0 violations)\n[-1,-3/8)\n(3/8,1]\n(-3/4,-3/16)\n(3/16,3/4)\n'),
    (['check', 'presentations', '--max-len', '2'], 0, 'presentation relations (len <= 2): ok (426 checks, 0 violations)\npresentation round trips (len <= 2): ok (45 checks, 0 violations)\n'),
    (['check', 'frobenius', '--max-len', '2', '--depth', '2'], 0, 'frobenius (len <= 2, stages <= 2): ok (31372 checks, 0 violations)\n'),
    (['relate', '--op', 'overlap', '+x', '-'], 2, ''),
    (['cstar', '--interval', '(1/3,1]'], 1, ''),
    (['factor', '--interval', '(0,1]', '--word', '++', '--depth', '2', '--bound', '0'], 3, ''),
    (['relate', '--op', 'lmid', '_', '+-+'], 0, 'true\n'),
    (['open', 'pair', '-+', '+-'], 0, '{_}\n'),
    (['forallc', '--', 'bot'], 0, '[-1,-1/2)\n'),
    (['check', 'hooks', '--max-len', '2'], 0, 'hook identities (len <= 2): ok (102 checks, 0 violations)\n'),
    (['check', 'adjunction', '--max-len', '2', '--depth', '1'], 0, 'adjunction (len <= 2, stages <= 1): ok (725 checks, 0 violations, 6 expected exceptions)\n'),
    (['check', 'theta', '--max-len', '2'], 0, 'theta monotone (len <= 2): ok (576 checks, 0 violations)\ntheta relations (len <= 2): ok (369 checks, 0 violations)\n'),
    (['eval', '--stream', '+-', '--digits', '2'], 2, ''),
]

'''Verification scenarios

Each scenario checks the constructive content of one claim on instances
small enough for the exact solvers. Scenario functions return
`(observed, expected, passed, witness)`; `scenario.run` wraps them into a
`Verdict`.

Lower bounds on the width or depth of a pair are checked through
Duplicator survival: W(G, H) >= t holds iff Duplicator survives the
unbounded game with t - 1 pebbles, and D(G, H) >= t iff Duplicator survives
t - 1 rounds with t - 1 pebbles.
'''
from collections import OrderedDict
from fractions import Fraction
import logging

from pebblebench.game.extraction import extract_sentence
from pebblebench.game.solver import (GameQuery, depth_D, duplicator_survives,
                                     solve_bounded, width_W)
from pebblebench.graph import (FamilySpec, build, generate, max_degree,
                               remove_vertex, sparkler_pair_layout)
from pebblebench.graphconstant import Family
from pebblebench.graphio import to_graph6
from pebblebench.logic.evaluation import evaluate
from pebblebench.logic.formula import quantifier_depth, variable_width
from pebblebench.logic.sentence import (canonical_subgraph_sentence,
                                        phi_s_sentence)
from pebblebench.pattern import (combined_lower_bound, contains,
                                 find_subgraph, large_degree_property,
                                 path_condition_a, path_condition_b,
                                 pattern_stats, phi_ell_holds,
                                 phi_ell_threshold, twin_decomposition,
                                 twin_of_largest_class)
from pebblebench.verify.sampling import (connected_corpus, connected_graphs,
                                         random_connected_graph, random_graph,
                                         random_nonisomorphic_pair,
                                         random_spider,
                                         random_star_path_graph, random_tree,
                                         relabeled, scenario_rng)
from pebblebench.verify.scenario import register

logger = logging.getLogger()


def _pair_witness(g, h, **extra):
    witness = OrderedDict([('g', to_graph6(g)), ('h', to_graph6(h))])
    witness.update(extra)
    return witness


def _number(value):
    '''JSON friendly number'''
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    return value


# ----------
# GAME LEMMAS
# ----------
def run_twin_lemma(corpus):
    '''W(G, G - v) >= t for every G with a twin class of size t >= 2'''
    checked = skipped = 0
    failures = []
    for g in corpus:
        sigma, twin = twin_of_largest_class(g)
        if sigma < 2:
            skipped += 1
            continue
        checked += 1
        h = remove_vertex(g, twin)
        if not duplicator_survives(g, h, sigma - 1):
            failures.append(_pair_witness(g, h, sigma=sigma, twin=twin))

    observed = OrderedDict([('graphs', len(corpus)), ('checked', checked),
                            ('skipped', skipped),
                            ('violations', len(failures))])
    return (observed, 'violations == 0', not failures,
            failures[0] if failures else None)


@register('twin-lemma',
          'Removing one of t twins gives a pair of width at least t',
          max_vertices=5)
def _twin_lemma(max_vertices):
    return run_twin_lemma(connected_corpus(max_vertices))


@register('clique-separation',
          'K_l and K_(l-1) have depth and width exactly l',
          max_ell=4)
def run_clique_separation(max_ell):
    observed = OrderedDict()
    failures = []
    for ell in range(2, max_ell + 1):
        g = build(Family.COMPLETE, n=ell)
        h = build(Family.COMPLETE, n=ell - 1)
        depth, width = depth_D(g, h), width_W(g, h)
        observed['depth_%d' % ell] = depth
        observed['width_%d' % ell] = width
        if depth != ell or width != ell:
            failures.append(_pair_witness(g, h, depth=depth, width=width))
    return (observed, 'depth_l == width_l == l', not failures,
            failures[0] if failures else None)


@register('pvv',
          'D(A, B) <= v/2 + 5/2 if sigma <= v/2 + 1/2, <= sigma + 2 '
          'otherwise, <= sigma + 1 if sigma >= v/2 + 1 and the largest '
          'twin class is maximal homogeneous',
          sampled=True, pairs=100, max_vertices=6)
def run_pvv_property(pairs, max_vertices, seed):
    rng = scenario_rng(seed, 'pvv')
    checks = 0
    failures = []
    for _ in range(pairs):
        n = int(rng.integers(2, max_vertices + 1))
        a, b = random_nonisomorphic_pair(rng, n)
        depth = depth_D(a, b)
        for first in (a, b):
            checks += 1
            bound = pvv_bound(first)
            if depth > bound:
                failures.append(_pair_witness(a, b, depth=depth,
                                              bound=_number(bound)))
    observed = OrderedDict([('pairs', pairs), ('checks', checks),
                            ('violations', len(failures))])
    return (observed, 'violations == 0', not failures,
            failures[0] if failures else None)


def pvv_bound(a):
    '''Depth upper bound for any pair (A, B) from the twin structure of A'''
    v = a.vertex_count
    decomposition = twin_decomposition(a)
    sigma = decomposition.sigma
    half = Fraction(v, 2)
    if sigma <= half + Fraction(1, 2):
        bound = half + Fraction(5, 2)
    else:
        bound = Fraction(sigma + 2)
    if sigma >= half + 1 and \
            decomposition.largest_class_is_maximal_homogeneous:
        bound = min(bound, Fraction(sigma + 1))
    return bound


# ----------
# SPARKLERS
# ----------
@register('sparkler-pair',
          'G_{a,b,n} contains S_{q,p}, H_{a,b,n} does not, both have more '
          'than n vertices, and W(G, H) >= q + p/2 - 2 - (p mod 2)/2',
          q=3, p=4, n=3, max_width_pebbles=2)
def run_sparkler_pair(q, p, n, max_width_pebbles=2):
    pair = build(Family.SPARKLER_LOWER_PAIR, q=q, p=p, n=n)
    layout = sparkler_pair_layout(q, p, n)
    sparkler = build(Family.SPARKLER, q=q, p=p)
    width_bound = q + Fraction(p, 2) - 2 - Fraction(p % 2, 2)

    observed = OrderedDict()
    observed['a'] = layout.a
    observed['b'] = layout.b
    observed['s'] = layout.s
    observed['g_vertices'] = pair.g.vertex_count
    observed['h_vertices'] = pair.h.vertex_count
    embedding = find_subgraph(pair.g, sparkler)
    observed['g_contains'] = embedding is not None
    observed['h_contains'] = contains(pair.h, sparkler)
    observed['width_bound'] = _number(width_bound)

    passed = (observed['g_contains'] and not observed['h_contains'] and
              pair.g.vertex_count > n and pair.h.vertex_count > n)
    pebbles = int(width_bound) - 1
    if pebbles <= max_width_pebbles:
        survives = duplicator_survives(pair.g, pair.h, pebbles)
        observed['width_checked'] = True
        observed['duplicator_survives'] = survives
        passed = passed and survives
    else:
        observed['width_checked'] = False

    witness = None if passed else _pair_witness(pair.g, pair.h)
    return (observed, 'g_contains and not h_contains and both > n vertices '
            'and duplicator_survives when width_checked', passed, witness)


@register('structure',
          'Connected graphs: K_{1,q} and P_{2qp} force S_{q,p}; '
          'max degree >= q + p with C_{p+1} or B_{p+2} forces S_{q,p}; '
          'S_{q,p}-free ones have max degree < q or v <= 3 '
          'max_degree^(2qp)',
          sampled=True, q=3, p=2, samples=200)
def run_structure_properties(q, p, samples, seed):
    rng = scenario_rng(seed, 'structure')
    sparkler = build(Family.SPARKLER, q=q, p=p)
    long_path = build(Family.PATH, cap=None, ell=2 * q * p)
    cycle = build(Family.CYCLE, n=p + 1) if p >= 2 else None
    fan = build(Family.BROKEN_FAN, n=p + 2) if p >= 2 else None

    counters = OrderedDict([('path_star_graphs', 0),
                            ('path_star_counterexamples', 0),
                            ('free_samples', 0),
                            ('free_with_star', 0),
                            ('free_path_counterexamples', 0),
                            ('degree_counterexamples', 0),
                            ('cycle_fan_applicable', 0),
                            ('cycle_fan_counterexamples', 0)])
    witness = None

    def fail(name, g):
        nonlocal witness
        counters[name] += 1
        witness = witness or OrderedDict(g=to_graph6(g))

    for _ in range(samples):
        g = relabeled(rng, random_star_path_graph(rng, q, 2 * q * p))
        counters['path_star_graphs'] += 1
        if not contains(g, sparkler):
            fail('path_star_counterexamples', g)

    for i in range(samples):
        if i % 3 == 0:
            g = random_spider(rng, int(rng.integers(q, q + 4)), p - 1)
        elif i % 3 == 1:
            g = random_tree(rng, int(rng.integers(q + 1, 2 * q * p + 2)))
        else:
            g = random_connected_graph(rng, int(rng.integers(q + 1,
                                                             q + p + 2)))
        g = relabeled(rng, g)
        if contains(g, sparkler):
            continue
        counters['free_samples'] += 1
        if max_degree(g) >= q:
            counters['free_with_star'] += 1
            if contains(g, long_path):
                fail('free_path_counterexamples', g)
        if not large_degree_property(g, q, p):
            fail('degree_counterexamples', g)

    for _ in range(samples if cycle else 0):
        g = random_connected_graph(rng, int(rng.integers(q + p + 2,
                                                         q + p + 5)))
        if max_degree(g) < q + p:
            continue
        if contains(g, cycle) or contains(g, fan):
            counters['cycle_fan_applicable'] += 1
            if not contains(g, sparkler):
                fail('cycle_fan_counterexamples', g)

    tiers = [('path_star', 'path_star_graphs'),
             ('degree', 'free_with_star')]
    if cycle:
        tiers.append(('cycle_fan', 'cycle_fan_applicable'))
    empty = [name for name, key in tiers if not counters[key]]
    counters['empty_tiers'] = empty
    passed = not (empty or any(value for key, value in counters.items()
                               if key.endswith('_counterexamples')))
    return (counters, 'every *_counterexamples == 0 and no empty tier',
            passed, None if passed else witness)


@register('lemma7-exploration',
          'Small S_{q,p}-free connected graphs with max degree >= q that '
          'contain C_{p+1} or B_{p+2} (exploratory, always passes)',
          sampled=True, q=3, p=3, samples=200)
def run_lemma7_exploration(q, p, samples, seed):
    rng = scenario_rng(seed, 'lemma7-exploration')
    sparkler = build(Family.SPARKLER, q=q, p=p)
    cycle = build(Family.CYCLE, n=p + 1)
    fan = build(Family.BROKEN_FAN, n=p + 2)
    found = 0
    example = None
    for _ in range(samples):
        g = random_connected_graph(rng, int(rng.integers(p + 2, q + p + 4)))
        if max_degree(g) < q or contains(g, sparkler):
            continue
        if contains(g, cycle) or contains(g, fan):
            found += 1
            example = example or to_graph6(g)
    observed = OrderedDict([('samples', samples), ('found', found),
                            ('example', example)])
    return observed, 'exploratory', True, None


# ----------
# STARS AND PATHS
# ----------
@register('star-theorem',
          'Duplicator survives the s-round s-pebble game on M_{s,t} and '
          'M_{s-1,t}; D = s + 1 and W = s; Phi_s decides K_{1,s} on '
          'connected graphs with more than 2s vertices',
          sampled=True, s=3, t=4, samples=20)
def run_star_theorem(s, t, samples=20, seed=0):
    g = build(Family.SUBDIVIDED_STAR, s=s, t=t)
    h = build(Family.SUBDIVIDED_STAR, s=s - 1, t=t)
    survives = not solve_bounded(GameQuery(g, h, s, s)).spoiler_wins
    depth = depth_D(g, h)
    width = width_W(g, h)
    phi = run_phi_s(s, samples, seed)

    observed = OrderedDict([('duplicator_survives', survives),
                            ('depth', depth), ('width', width),
                            ('phi_s_mismatches', phi[0]['mismatches'])])
    passed = survives and depth == s + 1 and width == s and phi[2]
    witness = None if passed else _pair_witness(g, h)
    return (observed, 'duplicator_survives and depth == s + 1 and '
            'width == s and phi_s_mismatches == 0', passed, witness)


@register('phi-s',
          'Phi_s holds on a connected graph with more than 2s vertices '
          'iff it contains K_{1,s}',
          sampled=True, s=3, samples=100)
def run_phi_s(s, samples, seed):
    rng = scenario_rng(seed, 'phi-s')
    sentence = phi_s_sentence(s)
    mismatches = positives = 0
    witness = None
    for i in range(samples):
        n = int(rng.integers(2 * s + 1, 2 * s + 4))
        if i % 4 == 3:
            family = Family.PATH if rng.random() < 0.5 else Family.CYCLE
            shape = build(family, **{'ell' if family is Family.PATH
                                     else 'n': n})
            g = relabeled(rng, shape)
        else:
            g = random_connected_graph(rng, n)
        has_star = max_degree(g) >= s
        positives += has_star
        if evaluate(sentence, g) != has_star:
            mismatches += 1
            witness = witness or OrderedDict(g=to_graph6(g))
    observed = OrderedDict([('samples', samples), ('with_star', positives),
                            ('mismatches', mismatches)])
    return observed, 'mismatches == 0', not mismatches, witness


def path_pair(ell, n):
    '''K_(l-1) and K_(l-2), each with a pendant K_{1,n}'''
    return (build(Family.CLIQUE_PENDANT_STAR, k=ell - 1, n=n),
            build(Family.CLIQUE_PENDANT_STAR, k=ell - 2, n=n))


@register('path-theorem',
          'K_(l-1) and K_(l-2) with a pendant K_{1,n}: P_l in G only, '
          'D(G, H) >= l - 1 and W(G, H) >= l - 2',
          ell=5, n=5)
def run_path_theorem(ell, n):
    g, h = path_pair(ell, n)
    path = build(Family.PATH, ell=ell)
    observed = OrderedDict([
        ('g_contains', contains(g, path)),
        ('h_contains', contains(h, path)),
        ('depth_at_least', duplicator_survives(g, h, ell - 2, ell - 2)),
        ('width_at_least', duplicator_survives(g, h, ell - 3))])
    passed = (observed['g_contains'] and not observed['h_contains'] and
              observed['depth_at_least'] and observed['width_at_least'])
    return (observed, 'g_contains and not h_contains and depth_at_least '
            'and width_at_least', passed,
            None if passed else _pair_witness(g, h))


@register('path-upper',
          'Connected G with P_l and H without, both with at least l '
          'vertices: Spoiler wins in l - 1 rounds with l - 1 pebbles and in '
          'l + 1 rounds with l - 2 pebbles',
          sampled=True, ell=5, samples=30)
def run_path_upper(ell, samples, seed):
    rng = scenario_rng(seed, 'path-upper')
    path = build(Family.PATH, ell=ell)
    counters = OrderedDict([('pairs', 0), ('h_condition_a', 0),
                            ('h_condition_b', 0), ('depth_failures', 0),
                            ('width_failures', 0)])
    witness = None
    tries = 0
    while counters['pairs'] < samples and tries < 200 * samples:
        tries += 1
        h = random_connected_graph(rng, int(rng.integers(ell, ell + 3)),
                                   p=0.1)
        if contains(h, path):
            continue
        g = random_connected_graph(rng, int(rng.integers(ell, ell + 3)))
        if not contains(g, path):
            continue
        counters['pairs'] += 1
        counters['h_condition_a'] += path_condition_a(h)
        counters['h_condition_b'] += path_condition_b(h, ell)
        deep = solve_bounded(GameQuery(g, h, ell - 1, ell - 1)).spoiler_wins
        wide = solve_bounded(GameQuery(g, h, ell - 2, ell + 1)).spoiler_wins
        if not deep:
            counters['depth_failures'] += 1
        if not wide:
            counters['width_failures'] += 1
        if not (deep and wide):
            witness = witness or _pair_witness(g, h)

    passed = not (counters['depth_failures'] or counters['width_failures'])
    return (counters, 'depth_failures == 0 and width_failures == 0', passed,
            witness)


# ----------
# PATTERN BOUNDS
# ----------
@register('theorem2-catalog',
          'Every connected F on l vertices has combined lower bound '
          '> 2l/3 - 2',
          sampled=True, max_ell=6, samples=500)
def run_theorem2_catalog(max_ell, samples, seed):
    rng = scenario_rng(seed, 'theorem2-catalog')
    checked = 0
    failures = []

    def check(f):
        bound = combined_lower_bound(f)
        if not bound > Fraction(2 * f.vertex_count, 3) - 2:
            failures.append(OrderedDict(f=to_graph6(f),
                                        bound=_number(bound)))

    for ell in range(2, max_ell + 1):
        for f in connected_graphs(ell):
            check(f)
            checked += 1
    for _ in range(samples):
        check(random_connected_graph(rng, int(rng.integers(7, 10))))
        checked += 1

    observed = OrderedDict([('exhaustive_up_to', max_ell),
                            ('samples', samples), ('checked', checked),
                            ('violations', len(failures))])
    return (observed, 'violations == 0', not failures,
            failures[0] if failures else None)


@register('phi-ell',
          'Every connected graph with more than N(l) vertices contains P_l '
          'or K_{1,l-1}',
          sampled=True, ell=4, samples=100)
def run_phi_ell(ell, samples, seed):
    rng = scenario_rng(seed, 'phi-ell')
    threshold = phi_ell_threshold(ell)
    failures = 0
    witness = None
    for _ in range(samples):
        g = random_connected_graph(
            rng, int(rng.integers(threshold + 1, threshold + 4)))
        if not phi_ell_holds(g, ell):
            failures += 1
            witness = witness or OrderedDict(g=to_graph6(g))
    below = build(Family.STAR, ell=ell - 1)
    observed = OrderedDict([('threshold', threshold), ('samples', samples),
                            ('violations', failures),
                            ('small_star_fails', not phi_ell_holds(below,
                                                                   ell))])
    return observed, 'violations == 0', not failures, witness


def _pattern(family, **parameters):
    names = {'q', 'p', 'n', 's', 't', 'k', 'ell'}
    spec = FamilySpec.of(family, **{k: v for k, v in parameters.items()
                                    if k in names and v is not None})
    return generate(spec)


@register('pendant-lemma',
          'K_(l-s) with a pendant star contains F, one twin less does '
          'not, width >= l - s - 1; same with a pendant path and p',
          family='sparkler', size=4, q=4, p=2, n=None, s=None, t=None,
          k=None, ell=None)
def run_pendant_lemma(family, size, **parameters):
    f = _pattern(family, **parameters)
    ell = f.vertex_count
    stats = pattern_stats(f)
    observed = OrderedDict([('ell', ell), ('pendant_star', stats.pendant_star),
                            ('pendant_path', stats.pendant_path)])
    passed = True
    witness = None

    checks = []
    if stats.pendant_star < ell - 1:
        k = ell - stats.pendant_star
        checks.append(('star', build(Family.CLIQUE_PENDANT_STAR, k=k,
                                     n=max(size, stats.pendant_star)),
                       build(Family.CLIQUE_PENDANT_STAR, k=k - 1,
                             n=max(size, stats.pendant_star)), k - 1))
    if stats.pendant_path < ell - 1:
        k = ell - stats.pendant_path
        length = max(size, stats.pendant_path + 1)
        checks.append(('path', build(Family.CLIQUE_PENDANT_PATH, k=k,
                                     n=length),
                       build(Family.CLIQUE_PENDANT_PATH, k=k - 1, n=length),
                       k - 1))

    for name, g, h, bound in checks:
        in_g, in_h = contains(g, f), contains(h, f)
        survives = duplicator_survives(g, h, bound - 1)
        observed['%s_g_contains' % name] = in_g
        observed['%s_h_contains' % name] = in_h
        observed['%s_width_bound' % name] = bound
        observed['%s_duplicator_survives' % name] = survives
        if not (in_g and not in_h and survives):
            passed = False
            witness = witness or _pair_witness(g, h, construction=name)
    return (observed, 'g_contains and not h_contains and '
            'duplicator_survives for each construction', passed, witness)


@register('pendant-sparkler',
          'K_l glued to S_{size,spa+1} at the tail end contains F, the same '
          'with K_(l-spa-3) does not, width >= l - spa - 3',
          family='glued-clique-sparkler', size=3, ell=4, p=0, n=3, q=None,
          s=None, t=None, k=None)
def run_pendant_sparkler_lemma(family, size, **parameters):
    f = _pattern(family, **parameters)
    ell = f.vertex_count
    spa = pattern_stats(f).pendant_sparkler
    observed = OrderedDict([('ell', ell), ('pendant_sparkler', spa)])
    small = ell - spa - 3 if spa is not None else 0
    if small < 1:
        observed['applicable'] = False
        return observed, 'applicable', True, None

    size = max(size, 3)
    g = build(Family.GLUED_CLIQUE_SPARKLER, ell=ell, p=spa, n=size)
    h = build(Family.GLUED_CLIQUE_SPARKLER, ell=small, p=spa, n=size)
    observed['applicable'] = True
    observed['g_contains'] = contains(g, f)
    observed['h_contains'] = contains(h, f)
    observed['width_bound'] = small
    observed['duplicator_survives'] = duplicator_survives(g, h, small - 1)
    passed = (observed['g_contains'] and not observed['h_contains'] and
              observed['duplicator_survives'])
    return (observed, 'g_contains and not h_contains and '
            'duplicator_survives', passed,
            None if passed else _pair_witness(g, h))


# ----------
# LOGIC
# ----------
@register('cross-oracle',
          'The canonical sentence of F holds on G iff G contains F',
          sampled=True, pairs=300, max_pattern=4, max_host=7)
def run_cross_oracle(pairs, max_pattern, max_host, seed):
    rng = scenario_rng(seed, 'cross-oracle')
    mismatches = present = 0
    witness = None
    for _ in range(pairs):
        f = random_connected_graph(rng, int(rng.integers(1, max_pattern + 1)))
        g = random_graph(rng, int(rng.integers(1, max_host + 1)),
                         rng.choice((0.2, 0.4, 0.6)))
        found = find_subgraph(g, f) is not None
        present += found
        if evaluate(canonical_subgraph_sentence(f), g) != found:
            mismatches += 1
            witness = witness or OrderedDict(f=to_graph6(f), g=to_graph6(g))
    observed = OrderedDict([('pairs', pairs), ('present', present),
                            ('mismatches', mismatches)])
    return observed, 'mismatches == 0', not mismatches, witness


@register('extraction',
          'A sentence extracted at (D, D) distinguishes the pair with depth '
          'and width at most D',
          sampled=True, pairs=50, max_vertices=6)
def run_extraction(pairs, max_vertices, seed):
    rng = scenario_rng(seed, 'extraction')
    failures = 0
    witness = None
    for _ in range(pairs):
        a, b = random_nonisomorphic_pair(
            rng, int(rng.integers(2, max_vertices + 1)))
        depth = depth_D(a, b)
        sentence = extract_sentence(a, b, depth, depth)
        sound = (evaluate(sentence, a) and not evaluate(sentence, b) and
                 quantifier_depth(sentence) <= depth and
                 variable_width(sentence) <= depth)
        if not sound:
            failures += 1
            witness = witness or _pair_witness(a, b, depth=depth)
    observed = OrderedDict([('pairs', pairs), ('failures', failures)])
    return observed, 'failures == 0', not failures, witness

import json
import logging
import sys

import jsonpickle
from pyfiglet import Figlet

from .certifier import certify, enumerate_intersecting_exact, spec_for, threshold_k
from .coloring import (coloring_to_latin_square, cyclic_latin_square, latin_square_to_coloring, measure_boundedness,
                       random_bounded_coloring, read_latin_csv)
from .configuration import ColembedConfig
from .constructions import (build_block_coloring, build_design, build_fan_coloring, build_first_ell_coloring,
                            build_plane_pattern, build_tree_pattern, write_incidence_csv)
from .embedder import embed
from .exceptions import ColembedException
from .families import family_for
from .models import (CanonicalEvent, ColoredHost, EmbedConfig, Embedding, EventFamilySpec, HostShape, HYPERGRAPH,
                     MULTIPARTITE, Pattern, RAINBOW)
from .negative_dependency import InjectionSpace, verify_negative_dependency
from .observers import PrometheusRunObserver, TranscriptRunObserver
from .oracle import exists_colored_copy, verify
from .seeding import resolve_seed

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_DEGENERATE = 3
EXIT_USAGE = 64
EXIT_IO = 74

STDIN = "-"


def colembed_main(args) -> int:
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.banner:
        _start_message()
    try:
        config = ColembedConfig.load(file_path=args.config)
        if getattr(args, 'transcript', None):
            config.update({'transcript_path': args.transcript})
        return _commands[args.command](args, config)
    except ColembedException as e:
        logger.error("%s", e)
        sys.stderr.write("error: {}\n".format(e))
        return EXIT_DEGENERATE
    except OSError as e:
        sys.stderr.write("error: {}\n".format(e))
        return EXIT_IO
    except (ValueError, KeyError, TypeError) as e:
        # Malformed JSON or text input
        sys.stderr.write("error: invalid input: {}\n".format(e))
        return EXIT_DEGENERATE


#############################################
# Input / output
#############################################

def _read_text(path: str) -> str:
    if path == STDIN:
        return sys.stdin.read()
    with open(path, "r") as source:
        return source.read()


def _read_host(path: str) -> ColoredHost:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return ColoredHost.from_json_dict(json.loads(text))
    return ColoredHost.from_text(text)


def _read_pattern(path: str) -> Pattern:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return Pattern.from_json_dict(json.loads(text))
    return Pattern.from_text(text)


def _read_embedding(path: str) -> Embedding:
    data = json.loads(_read_text(path))
    if isinstance(data, dict):
        data = data['embedding']
        if data is None:
            raise ValueError("report holds no embedding")
    return Embedding(data)


def _emit(data, args):
    text = jsonpickle.encode(data, unpicklable=False, indent=2 if args.pretty else None)
    if args.output and args.output != STDIN:
        with open(args.output, "w") as target:
            target.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _start_message():
    f = Figlet(font='slant')
    sys.stderr.write(f.renderText('colembed'))


#############################################
# Subcommands
#############################################

def _gen_host(args, config) -> int:
    if args.kind == MULTIPARTITE:
        shape = HostShape.multipartite(args.m, args.n)
    else:
        shape = HostShape.hypergraph(args.n, args.r)
    data = dict()
    if args.coloring == "random":
        seed = resolve_seed(args.seed, config)
        host = random_bounded_coloring(shape, args.k, args.bound, seed, config.local_coloring_probes)
        data['seed'] = seed
    elif args.coloring == "rainbow":
        host = ColoredHost(shape, {edge: i for i, edge in enumerate(shape.edges())})
    else:
        host = ColoredHost(shape, {edge: 0 for edge in shape.edges()})
    data.update(host.to_json_dict())
    _emit(data, args)
    return EXIT_OK


def _measure(args, config) -> int:
    _emit(measure_boundedness(_read_host(args.host)).to_json_dict(), args)
    return EXIT_OK


def _certify(args, config) -> int:
    if args.pattern:
        pattern = _read_pattern(args.pattern)
        host = _read_host(args.host)
        spec = spec_for(pattern, host, args.mode, args.k, args.ell, args.bound)
    elif args.kind == HYPERGRAPH:
        deltas = [None] * (args.ell + 1)
        deltas[1] = args.delta1
        deltas[args.ell] = args.delta_ell
        spec = EventFamilySpec.for_hypergraph(args.mode, args.n, args.r, args.ell, deltas, args.k, args.bound)
    else:
        spec = EventFamilySpec.for_graph(args.mode, args.n, args.delta, args.k, args.m, args.bound)
    certificate = certify(spec, config)
    data = certificate.to_json_dict()
    if args.pattern and args.exact:
        family = family_for(pattern, host.shape, args.mode)
        event = next(iter(family.bad_events(host)), None)
        if event is not None:
            exact = enumerate_intersecting_exact(event, family, host, config.exact_enumeration_limit)
            data['exact_intersections'] = exact
    _emit(data, args)
    return EXIT_OK if certificate.passes else EXIT_FAIL


def _threshold(args, config) -> int:
    k = threshold_k(args.theorem, args.n, delta=args.delta, r=args.r, ell=args.ell, delta1=args.delta1,
                    delta_ell=args.delta_ell, config=config)
    _emit(k, args)
    return EXIT_OK


def _embed(args, config) -> int:
    pattern = _read_pattern(args.pattern)
    host = _read_host(args.host)
    embed_config = EmbedConfig.from_config(config, mode=args.mode, max_resamples=args.max_resamples,
                                           restarts=args.restarts, seed=args.seed, scan_order=args.scan_order,
                                           parallel=args.parallel)
    observers = [PrometheusRunObserver(config), TranscriptRunObserver(config)]
    for observer in observers:
        if observer.enabled():
            message = observer.start()
            sys.stderr.write("...started: {} {}\n".format(observer, message or ''))
    report = embed(pattern, host, embed_config, config, observers)
    _emit(report.to_json_dict(), args)
    return EXIT_OK if report.success else EXIT_FAIL


def _oracle(args, config) -> int:
    pattern = _read_pattern(args.pattern)
    host = _read_host(args.host)
    exists, witness = exists_colored_copy(pattern, host, args.mode, config.oracle_search_limit)
    _emit({'mode': args.mode, 'exists': exists, 'witness': None if witness is None else witness.to_json_dict()},
          args)
    return EXIT_OK


def _construct(args, config) -> int:
    kind = args.construction
    if kind == "plane-pattern":
        result = build_plane_pattern(args.q, args.m)
        if args.incidence_csv:
            write_incidence_csv(result.plane.incidence_matrix(), args.incidence_csv)
        data = result.to_json_dict()
    elif kind == "fan-coloring":
        data = build_fan_coloring(args.q, args.m, args.n).to_json_dict()
    elif kind == "first-ell":
        data = build_first_ell_coloring(args.n, args.r, args.ell).to_json_dict()
    elif kind == "design":
        design = build_design(args.r, args.ell, args.m)
        if args.incidence_csv:
            write_incidence_csv(design.incidence_matrix(), args.incidence_csv)
        data = design.to_pattern().to_json_dict()
        data['ell'] = design.ell
    elif kind == "tree":
        data = build_tree_pattern(args.r, args.n1, args.max_vertices).to_json_dict()
    else:
        data = build_block_coloring(args.n, args.r).to_json_dict()
    _emit(data, args)
    return EXIT_OK


def _verify_negdep(args, config) -> int:
    space = InjectionSpace(args.x_sizes, args.y_sizes)
    if args.events:
        events = [CanonicalEvent({int(x): int(y) for x, y in mapping.items()})
                  for mapping in json.loads(_read_text(args.events))]
    else:
        events = space.single_pair_events()
    seed = resolve_seed(args.seed, config)
    report = verify_negative_dependency(args.x_sizes, args.y_sizes, events, args.graph, config, seed)
    data = report.to_json_dict()
    data['seed'] = seed
    _emit(data, args)
    return EXIT_OK if report.ok else EXIT_FAIL


def _latin(args, config) -> int:
    if args.cyclic:
        square = cyclic_latin_square(args.order)
    elif args.csv:
        square = read_latin_csv(args.csv)
    else:
        square = coloring_to_latin_square(_read_host(args.host))
    host = latin_square_to_coloring(square)
    if args.latin_command == "import":
        _emit(host.to_json_dict(), args)
        return EXIT_OK
    n = len(square)
    matching = Pattern(2 * n, [(i, n + i) for i in range(n)], 2, [0] * n + [1] * n)
    exists, witness = exists_colored_copy(matching, host, RAINBOW, config.oracle_search_limit)
    if not exists:
        _emit("none", args)
    else:
        columns = [0] * n
        for i in range(n):
            columns[witness[i]] = witness[n + i] - n
        _emit(columns, args)
    return EXIT_OK


def _verify(args, config) -> int:
    embedding = _read_embedding(args.embedding)
    pattern = _read_pattern(args.pattern)
    host = _read_host(args.host)
    valid, report = verify(embedding, pattern, host, args.mode)
    data = report.to_json_dict()
    data['valid'] = valid
    _emit(data, args)
    return EXIT_OK if valid else EXIT_FAIL


_commands = {
    'gen-host': _gen_host,
    'measure': _measure,
    'certify': _certify,
    'threshold': _threshold,
    'embed': _embed,
    'oracle': _oracle,
    'construct': _construct,
    'verify-negdep': _verify_negdep,
    'latin': _latin,
    'verify': _verify,
}

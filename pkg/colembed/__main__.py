import argparse
import sys

from .colembed import colembed_main, EXIT_USAGE, STDIN
from .certifier import THEOREMS
from .models import HYPERGRAPH, MULTIPARTITE, PROPER
from .models.certificate import GLOBAL, LOCAL
from .models.embedding import MODES, SCAN_ORDERS
from .negative_dependency import GRAPHS


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("{}: error: {}\n".format(self.prog, message))
        sys.exit(EXIT_USAGE)


def _common_args() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument('--config', dest='config', action='store', default="colembed.json",
                        help='JSON configuration file, read if present')
    common.add_argument('--seed', dest='seed', action='store', default=None, type=int,
                        help='64-bit seed for randomized subcommands (echoed in the output)')
    common.add_argument('-o', '--output', dest='output', action='store', default=None,
                        help='Write JSON output to this file instead of stdout')
    common.add_argument('--pretty', dest='pretty', action='store_true', help='Indent JSON output')
    common.add_argument('-v', '--verbose', dest='verbose', action='store_true', help='Debug logging on stderr')
    common.add_argument('--banner', dest='banner', action='store_true', help='Print the start banner on stderr')
    return common


def _add_mode(parser):
    parser.add_argument('--mode', dest='mode', choices=MODES, default=PROPER,
                        help='proper or rainbow copies')


def _add_inputs(parser, *names):
    for name in names:
        parser.add_argument('--{}'.format(name), dest=name, action='store', required=True,
                            help='{} file (JSON or text), "-" for stdin'.format(name.capitalize()))


def _get_args(argv=None):
    common = _common_args()
    parser = _ArgumentParser(prog='colembed', description='Colored embeddings under bounded edge-colorings')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    gen_host = commands.add_parser('gen-host', parents=[common], help='Generate a colored host')
    gen_host.add_argument('--kind', dest='kind', choices=(MULTIPARTITE, HYPERGRAPH), default=MULTIPARTITE)
    gen_host.add_argument('--m', dest='m', type=int, default=2, help='Number of parts')
    gen_host.add_argument('--n', dest='n', type=int, required=True, help='Vertices per part (or in total)')
    gen_host.add_argument('--r', dest='r', type=int, default=2, help='Edge size of hypergraph hosts')
    gen_host.add_argument('--coloring', dest='coloring', choices=('random', 'rainbow', 'monochrome'),
                          default='random')
    gen_host.add_argument('--k', dest='k', type=int, default=1, help='Target bound of random colorings')
    gen_host.add_argument('--bound', dest='bound', choices=(LOCAL, GLOBAL), default=GLOBAL)

    measure = commands.add_parser('measure', parents=[common], help='Measure local and global boundedness')
    measure.add_argument('--host', dest='host', default=STDIN, help='Host file, "-" for stdin (default)')

    certify = commands.add_parser('certify', parents=[common], help='Local lemma certificate')
    _add_mode(certify)
    certify.add_argument('--k', dest='k', type=int, required=True)
    certify.add_argument('--bound', dest='bound', choices=(LOCAL, GLOBAL), default=None)
    certify.add_argument('--pattern', dest='pattern', default=None, help='Derive degrees from a pattern file')
    certify.add_argument('--host', dest='host', default=None, help='Host file, used with --pattern')
    certify.add_argument('--exact', dest='exact', action='store_true',
                         help='Also count the events intersecting the first bad event exactly')
    certify.add_argument('--kind', dest='kind', choices=(MULTIPARTITE, HYPERGRAPH), default=MULTIPARTITE)
    certify.add_argument('--n', dest='n', type=int, default=None)
    certify.add_argument('--m', dest='m', type=int, default=2)
    certify.add_argument('--delta', dest='delta', type=int, default=None)
    certify.add_argument('--r', dest='r', type=int, default=None)
    certify.add_argument('--ell', dest='ell', type=int, default=None)
    certify.add_argument('--delta1', dest='delta1', type=int, default=None)
    certify.add_argument('--delta-ell', dest='delta_ell', type=int, default=None)

    threshold = commands.add_parser('threshold', parents=[common], help='Largest k covered by a theorem')
    threshold.add_argument('--theorem', dest='theorem', choices=THEOREMS, required=True)
    threshold.add_argument('--n', dest='n', type=int, required=True)
    threshold.add_argument('--delta', dest='delta', type=int, default=None)
    threshold.add_argument('--r', dest='r', type=int, default=None)
    threshold.add_argument('--ell', dest='ell', type=int, default=None)
    threshold.add_argument('--delta1', dest='delta1', type=int, default=None)
    threshold.add_argument('--delta-ell', dest='delta_ell', type=int, default=None)

    embed = commands.add_parser('embed', parents=[common], help='Randomized resampling search')
    _add_inputs(embed, 'pattern', 'host')
    _add_mode(embed)
    embed.add_argument('--restarts', dest='restarts', type=int, default=None)
    embed.add_argument('--max-resamples', dest='max_resamples', type=int, default=None)
    embed.add_argument('--scan-order', dest='scan_order', choices=SCAN_ORDERS, default=None)
    embed.add_argument('--parallel', dest='parallel', action='store_true', help='Run restarts in threads')
    embed.add_argument('--transcript', dest='transcript', default=None, help='Log the run transcript to this file')

    oracle = commands.add_parser('oracle', parents=[common], help='Exhaustive existence check')
    _add_inputs(oracle, 'pattern', 'host')
    _add_mode(oracle)

    construct = commands.add_parser('construct', help='Extremal constructions')
    constructions = construct.add_subparsers(dest='construction', metavar='construction')
    constructions.required = True
    plane = constructions.add_parser('plane-pattern', parents=[common])
    plane.add_argument('--q', dest='q', type=int, required=True)
    plane.add_argument('--m', dest='m', type=int, required=True)
    plane.add_argument('--incidence-csv', dest='incidence_csv', default=None)
    fan = constructions.add_parser('fan-coloring', parents=[common])
    fan.add_argument('--q', dest='q', type=int, required=True)
    fan.add_argument('--m', dest='m', type=int, required=True)
    fan.add_argument('--n', dest='n', type=int, required=True)
    first_ell = constructions.add_parser('first-ell', parents=[common])
    first_ell.add_argument('--n', dest='n', type=int, required=True)
    first_ell.add_argument('--r', dest='r', type=int, required=True)
    first_ell.add_argument('--ell', dest='ell', type=int, required=True)
    design = constructions.add_parser('design', parents=[common])
    design.add_argument('--r', dest='r', type=int, required=True)
    design.add_argument('--ell', dest='ell', type=int, required=True)
    design.add_argument('--m', dest='m', type=int, required=True)
    design.add_argument('--incidence-csv', dest='incidence_csv', default=None)
    tree = constructions.add_parser('tree', parents=[common])
    tree.add_argument('--r', dest='r', type=int, required=True)
    tree.add_argument('--n1', dest='n1', type=int, required=True)
    tree.add_argument('--max-vertices', dest='max_vertices', type=int, default=None)
    block = constructions.add_parser('block', parents=[common])
    block.add_argument('--n', dest='n', type=int, required=True)
    block.add_argument('--r', dest='r', type=int, required=True)

    negdep = commands.add_parser('verify-negdep', parents=[common], help='Exhaustive negative dependency check')
    negdep.add_argument('--x-sizes', dest='x_sizes', type=int, nargs='+', required=True)
    negdep.add_argument('--y-sizes', dest='y_sizes', type=int, nargs='+', required=True)
    negdep.add_argument('--graph', dest='graph', choices=GRAPHS, default=GRAPHS[0])
    negdep.add_argument('--events', dest='events', default=None,
                        help='JSON list of {x: y} mappings (default: every single-pair event)')

    latin = commands.add_parser('latin', help='Latin squares as K_(n,n) colorings')
    latin_commands = latin.add_subparsers(dest='latin_command', metavar='action')
    latin_commands.required = True
    for name in ('import', 'transversal'):
        action = latin_commands.add_parser(name, parents=[common])
        action.add_argument('--csv', dest='csv', default=None, help='Latin square as CSV of symbols')
        action.add_argument('--host', dest='host', default=STDIN, help='K_(n,n) host file')
        action.add_argument('--order', dest='order', type=int, default=None)
        action.add_argument('--cyclic', dest='cyclic', action='store_true', help='Use the addition table of Z_order')

    verify = commands.add_parser('verify', parents=[common], help='Validate an embedding')
    _add_inputs(verify, 'embedding', 'pattern', 'host')
    _add_mode(verify)

    args = parser.parse_args(argv)
    if getattr(args, 'cyclic', False) and args.order is None:
        parser.error("--cyclic needs --order")
    return args


def main(argv=None) -> int:
    try:
        args = _get_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return colembed_main(args)


if __name__ == '__main__':
    sys.exit(main())

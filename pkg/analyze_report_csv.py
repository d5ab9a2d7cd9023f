import argparse
import csv
import math
import os


def load_csv(filename):
    """
    Reads each row of a CSV into a list using a DictReader
    """
    if not (os.path.exists(filename) and os.path.isfile(filename)):
        raise FileNotFoundError(filename)

    with open(filename, 'r') as f:
        infile = csv.DictReader(f)
        results = [row for row in infile]

    return results


def _residual(row):
    try:
        return float(row['abs_residual'])
    except ValueError:
        return math.nan


def _params(row):
    names = ('a', 'b', 'n', 't', 'w', 'x', 'm', 'K')
    return ' '.join('{}={}'.format(name, row[name]) for name in names if row.get(name))


def count_verdicts(results):
    counts = dict()
    for row in results:
        per_variant = counts.setdefault(row['variant'], dict())
        per_variant[row['verdict']] = per_variant.get(row['verdict'], 0) + 1
    return counts


def show_verdicts(results, args):
    for variant, counts in count_verdicts(results).items():
        summary = ', '.join('{} {}'.format(counts.get(v, 0), v) for v in ('pass', 'fail', 'unresolved'))
        print("{}: {}".format(variant, summary))


def show_worst(results, args):
    # unresolved rows have no residual and are left out
    scored = [row for row in results if not math.isnan(_residual(row))]
    output = sorted(scored, key=lambda row: -_residual(row))[:args.top]

    for row in output:
        print("{} {}: {:.3e} ({})".format(row['variant'], _params(row), _residual(row), row['verdict']))


ANALYSIS_TYPES = ["worst", "verdicts"]
ANALYSIS_FUNCS = [show_worst, show_verdicts]
assert(len(ANALYSIS_TYPES) == len(ANALYSIS_FUNCS))


def make_parser():
    parser = argparse.ArgumentParser()

    parser.add_argument('analysis_type', type=str, choices=ANALYSIS_TYPES,
            help="The type of analysis to perform")

    parser.add_argument('file', type=str,
            help="The CSV written by a scan or verify run")

    parser.add_argument("--top", type=int, default=10,
            help="How many of the worst residuals to show")

    return parser


if __name__ == "__main__":
    args = make_parser().parse_args()

    results = load_csv(args.file)

    for i in range(len(ANALYSIS_TYPES)):
        if args.analysis_type == ANALYSIS_TYPES[i]:
            ANALYSIS_FUNCS[i](results, args)

#!/usr/bin/env python3
"""
Feature Report Example

Reads periods, unstable stretches and convexity off synthetic series, then
saves a composite PNG of one diagram.
"""

import json
import sys
from pathlib import Path

from peakcell import (
    RenderFormat,
    RenderSpec,
    SyntheticKind,
    SyntheticSpec,
    analyze_series,
    generate,
    render_series,
)


def describe(kind: SyntheticKind, n: int, steps: int) -> None:
    report = analyze_series(generate(SyntheticSpec(kind, n)), steps=steps)
    print(f"   {kind.value} (N={report.n}, K={report.steps})")
    print(f"     Convexity: {report.convexity.value}")
    for estimate in report.periods:
        print(f"     Period {estimate.period:>3}  strength {estimate.strength:.3f}")
    for interval in report.instabilities:
        print(f"     Unstable {interval.start}..{interval.end}  score {interval.score:.3f}")


def main(output_dir: str = ".") -> None:
    print("=" * 70)
    print("PeakCell Feature Report")
    print("=" * 70)
    print()

    print("1. Periodic Signals")
    describe(SyntheticKind.WEEKLY, 140, 64)
    describe(SyntheticKind.SIN, 500, 128)
    describe(SyntheticKind.SIN_PLUS_COS3X, 600, 128)

    print("\n2. Unstable Region")
    describe(SyntheticKind.BURST, 240, 32)

    print("\n3. JSON Report")
    report = analyze_series(generate(SyntheticSpec(SyntheticKind.PARABOLA, 21)), steps=8)
    print(json.dumps(report.to_dict(), indent=2))

    print("\n4. Composite Image")
    path = Path(output_dir) / "sin_diagram.png"
    spec = RenderSpec(format=RenderFormat.PNG, cell_size=2, composite=True)
    data = render_series(generate(SyntheticSpec(SyntheticKind.SIN, 500)), 128, spec, path)
    print(f"   Saved {len(data)} bytes to {path}")

    print("\n" + "=" * 70)


if __name__ == "__main__":
    main(*sys.argv[1:2])

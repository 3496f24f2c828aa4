#!/usr/bin/env python3
"""
Basic Diagram Example

Builds the cellular diagram of a few small series and prints it as text.
"""

from peakcell import (
    SyntheticKind,
    SyntheticSpec,
    build_diagram,
    generate,
    render_ascii,
    smooth_step,
)


def main():
    print("=== PeakCell - Basic Diagram Example ===\n")

    # Example 1: a single smoothing step
    print("1. One Step")
    result = smooth_step([0, 2, 0.5, 2, 0.5, 2, 0])
    print(f"   Values: {result.values.tolist()}")
    print(f"   Mask:   {result.mask.astype(int).tolist()}\n")

    # Example 2: the jagged series drifts inwards
    print("2. Jagged Series")
    diagram = build_diagram([0, 2, 0.5, 2, 0.5, 2, 0], steps=3)
    for line in render_ascii(diagram).splitlines():
        print(f"   {line}")

    # Example 3: synthetic signals
    print("\n3. Synthetic Signals")
    for kind in (SyntheticKind.SAWTOOTH, SyntheticKind.PARABOLA, SyntheticKind.LINEAR):
        diagram = build_diagram(generate(SyntheticSpec(kind, 24)), steps=6)
        black = int(diagram.masks.sum())
        print(f"   {kind.value:<10} {black:>4} black cells")
        for line in render_ascii(diagram).splitlines():
            print(f"     {line}")

    print("\n=== Example Complete ===")


if __name__ == "__main__":
    main()

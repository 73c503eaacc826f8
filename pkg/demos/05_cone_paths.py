#!/usr/bin/env python3
"""Cones with approach paths: winding classes, the ordered exchange
condition, and how a full rotation moves a path to an inequivalent one."""

import math

from anyonstat import conegeom as cgm
from anyonstat import covergroup as cg

print("=" * 70)
print("Paths of cones and their winding classes")
print("=" * 70)

sector, direct, nearby, wound = cgm.single_cone_paths()
print(f"\nOne cone with direction interval ({sector.alpha:+.2f}, {sector.beta:+.2f}),")
print("three approach paths ending inside it:")
print(f"  direct (angle {direct.accumulated_angle:+.2f})  ~  nearby "
      f"(angle {nearby.accumulated_angle:+.2f}): "
      f"{cgm.path_equivalent(direct, nearby, sector)}")
print(f"  direct  ~  wound once (angle {wound.accumulated_angle:+.2f}): "
      f"{cgm.path_equivalent(direct, wound, sector)}")

deck = cgm.poincare_act_path(
    cg.PoincareElement.pure_lorentz(cg.lift_rotation(2 * math.pi)), direct)
print(f"\nActing with a full rotation shifts the class by one turn:")
print(f"  new accumulated angle = {deck.accumulated_angle:+.4f}; equivalent to "
      f"the original: {cgm.path_equivalent(deck, direct, sector)}")

print("\n" + "-" * 70)
print("The ordered exchange condition")
print("-" * 70)
p1, p2 = cgm.antipodal_pair()
print(f"\nTwo oppositely pointing cones, apexes offset along the x-axis.")
print(f"  causally separated:      {cgm.causally_separated(p1.sector, p2.sector)}")
print(f"  difference cone salient: {cgm.difference_salient(p1.sector, p2.sector)}")
print(f"  dual contains -x axis:   {cgm.c12_negative_axis(p1.sector, p2.sector)}")
print(f"\n  exchange(first, second): {cgm.exchange_hypothesis(p1, p2)}")
print(f"  exchange(second, first): {cgm.exchange_hypothesis(p2, p1)}  (the order matters)")
wound1 = cgm.ConePath(p1.sector, p1.accumulated_angle + 2 * math.pi)
print(f"  after an extra winding:  {cgm.exchange_hypothesis(wound1, p2)}  (no longer direct)")

print("\nThe wedge class gating strip analyticity:")
print(f"  quarter rotation:        {cgm.in_wedge_class(cg.lift_rotation(math.pi / 2))}")
print(f"  identity:                {cgm.in_wedge_class(cg.identity())}  (reference sits on the edge)")
print(f"  quarter + full turn:     {cgm.in_wedge_class(cg.lift_rotation(math.pi / 2 + 2 * math.pi))}")

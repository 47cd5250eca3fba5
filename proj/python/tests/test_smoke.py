"""End-to-end checks of the arxpy module against independently computed values.

Runs as a plain script: every check is an assert, and reaching the final
print means the module loaded and all numeric paths agree.
"""

import math

import arxpy


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


assert arxpy.__version__ == "1.0.0"

# platform surface
crown = arxpy.crown()
assert close(crown["x"], 13.827227832849)
assert close(crown["y"], 36.992172872155)
assert close(crown["z"], 0.20508639005614)
assert crown["grad_norm"] < 1e-10
assert abs(arxpy.elevation(crown["x"], crown["y"]) - crown["z"]) < 1e-12

assert close(arxpy.side_slope_deg("east"), 0.255450640708)
assert close(arxpy.side_slope_deg("north"), 0.184988467113)
c0, c1, c2, length = arxpy.side_profile("east")
assert close(length, 30.9)
assert c2 < 0.0

# curve fitting
samples = [(s, 2.0 - 0.3 * s + 0.05 * s * s) for s in range(0, 11)]
fit = arxpy.fit_curve("parabola", samples)
assert fit["family"] == "parabola"
assert close(fit["c1"], -0.3, 1e-10)
assert close(fit["c2"], 0.05, 1e-10)
assert fit["rms_residual"] < 1e-12

east_samples = [(s, c0 + (c1 + c2 * s) * s) for s in (i * length / 30.0 for i in range(31))]
east_fit = arxpy.fit_curve("parabola", east_samples)
assert close(east_fit["sagitta"], 0.06888190302, 1e-8)

# column shaft
z_star, delta = arxpy.entasis()
assert close(z_star, 5.02)
assert close(delta, 0.0180627143052, 1e-8)
assert close(arxpy.shaft_radius(0.0), 0.954753)
assert close(arxpy.shaft_radius(5.02), 0.8601794616948)
assert close(arxpy.shaft_radius(5.02, fluted=True, theta=0.0), 0.782397783561669)

# perception
assert close(arxpy.critical_sagitta(25.0, 420.0), 0.0509055068710118)
assert close(arxpy.critical_sagitta(25.0, 120.0), 0.0145444120742051)
assert close(arxpy.visual_angle(1.0, 1e6), 1e-6, 1e-6)
assert close(
    arxpy.scaled_letter_height(20.0, 10.0, math.radians(0.5)), 0.195134980895364
)
status, dist = arxpy.equalization_distance(1.0, 2.0, 1.1124853987249621, 10.0)
assert status == "unique"
assert close(dist, 20.0, 1e-6)
assert close(arxpy.tilt_convergence_height(14.45), 2069.77640812391)
assert arxpy.expected_bhr(180.0) == 8.0
assert arxpy.expected_bhr(172.5) == 7.75

# physics
drain = arxpy.drainage()
assert close(drain["U"], 0.0114144301277816)
assert close(drain["t_d"], 7884.75631218319)
assert close(drain["t_d"], 3.0 * 30.0 / drain["U"], 1e-12)

buckle = arxpy.buckling()
assert close(buckle["P_cr"], 907043244.348753)
assert buckle["mode"] == "crush"
assert buckle["euler_marginal"]
assert close(buckle["slenderness"], 10.4 / 0.75)

# visibility
assert arxpy.corner_against_sky(15.45, -5.0, "se")
assert arxpy.corner_against_sky(15.45, -5.0, "ne")
assert not arxpy.corner_against_sky(15.45, -5.0, "nw")
assert not arxpy.corner_against_sky(15.45, -5.0, "sw")

areas = arxpy.vantage_areas(cell=2.0, extent=300.0, rays=32)
assert close(areas["east"], 2752.0)
assert close(areas["west"], 2752.0)
assert close(areas["south"], 7568.0)
assert close(areas["north"], 7568.0)

# figures
facade = arxpy.facade_svg()
assert facade.startswith("<?xml")
assert "<svg" in facade and "stylobate_top" in facade
assert facade == arxpy.facade_svg()

zollner = arxpy.illusion_svg("zollner")
assert '<g id="mains">' in zollner and '<g id="hatches">' in zollner

pair = arxpy.profile_pair_svg(seed=0)
assert 'id="outline_left_left"' in pair
assert "left=first" in pair
assert pair == arxpy.profile_pair_svg(seed=0)

print("smoke: all checks passed")

#! /usr/bin/env python
# -*- coding: utf-8 -*-
import laguerrecodec as lc
from laguerrecodec.core.datamodel.permutation import to_cycle_notation
from laguerrecodec.core.textio import format_history
from laguerrecodec.core.utils.rendering import render_history

# The permutation used throughout this example, in one-line form.
# Its cycles are (1,4,11,7)(2,9,6,10,8,3)(5)(12)(13,16,14,17,15).
sigma = lc.Permutation([4, 9, 2, 11, 5, 10, 1, 3, 6, 8, 7, 12, 16, 17, 13, 14, 15])
print(f"sigma = {sigma}    {to_cycle_notation(sigma)}")

# Print the set-valued statistics
for name, values in lc.profile(sigma).asdict().items():
    print(f"\t{name:6s} {' '.join(str(i) for i in values)}")

# Encode the permutation and draw its Motzkin path
history = lc.encode(sigma)
print(format_history(history))
print(render_history(history))

# Image under rho1 and the permutation it decodes to. Cyc of the image
# is Arecp of sigma, while Erec, Exc and Rar are kept.
omega = lc.phi(sigma)
print(f"\nrho1:  {lc.rho1(history)}")
print(f"phi(sigma) = {omega}")
print(f"\tArecp(sigma) = {lc.profile(sigma).arecp},  Cyc(omega) = {lc.profile(omega).cyc}")

# Image under the involution rho2. Cyc and Arecp are exchanged.
tau = lc.phi_cap(sigma)
print(f"\nrho2:  {lc.rho2(history)}")
print(f"Phi(sigma) = {tau}")
print(f"\tCyc(tau) = {lc.profile(tau).cyc},  Arecp(tau) = {lc.profile(tau).arecp}")

# Phi is an involution
assert lc.phi_cap(tau) == sigma

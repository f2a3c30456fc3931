# -*- coding: utf-8 -*-
""" 
Exposes only the functional modules to the user. The data model 
classes should be imported from the submodules. 
"""
from .codec import encode, decode, decode_graph
from .bijections import rho1, rho1_inv, rho2, phi, phi_cap
from .contfrac import (stieltjes_moments, jacobi_moments, brute_force_mu,
                       brute_force_jacobi)
from .verification import run_check

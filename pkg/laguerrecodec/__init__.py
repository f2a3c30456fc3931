# -*- coding: utf-8 -*-
from .version import __version__

# Import the main functions
from .core.codec import encode, decode
from .core.bijections import rho1, rho1_inv, rho2, phi, phi_cap
from .core.datamodel.permutation import Permutation, profile
from .core.datamodel.history import LaguerreHistory, history_profile, validate

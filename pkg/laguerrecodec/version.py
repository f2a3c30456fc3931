# -*- coding: utf-8 -*-

# Version of the laguerrecodec package: Year.Month.iteration
VERSION = (26, 10, 1)

__version__ = ".".join(map(str, VERSION))

# -*- coding: utf-8 -*-
from .customlogger import logger

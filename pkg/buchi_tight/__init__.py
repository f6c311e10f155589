# -*- coding: utf-8 -*-

# ==============================================================================
# Globals
# ==============================================================================
__version__ = '0.1.0'

# -*- coding: utf-8 -*-

__author__ = 'Daniel Williams'
__email__ = 'daniel.williams@glasgow.ac.uk'
__version__ = '0.1.0'

"""p-adic numbers at finite precision"""
from .numbers import PadicNumber, arith, embed, embed_rational
from .hensel import cube_root, hensel_root, nth_root, sqrt, teichmuller
from .field import PadicField

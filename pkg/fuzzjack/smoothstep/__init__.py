# -*- coding: utf-8 -*-

from fuzzjack.smoothstep.jewett import JewettPoly, jewett_poly
from fuzzjack.smoothstep.family import PsiFamily, psi_family, PhiFamily, phi_family

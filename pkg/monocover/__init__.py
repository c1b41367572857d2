import monocover.utils
from monocover.core import *
from monocover.formulas import *
from monocover.normal import *
from monocover.construct import *
from monocover.oracle import *
from monocover.serial import *
from monocover.render import *
from monocover.utils.dev import setloglevel

setloglevel('INFO')

#=========================================================================
# setup.py
#=========================================================================
# setup.py inspired by the PyPA sample project:
# https://github.com/pypa/sampleproject/blob/master/setup.py

from setuptools import setup, find_packages
from codecs     import open   # To use a consistent encoding
from os         import path
from subprocess import check_output, CalledProcessError

#-------------------------------------------------------------------------
# get_version
#-------------------------------------------------------------------------
# We use the output of git describe to create a version number. Outside
# a tagged git checkout this falls back to a development version.

def get_version():
  cmd = "git describe --dirty"
  try:
    result = check_output( cmd.split(), universal_newlines=True ).strip()
  except ( OSError, CalledProcessError ):
    result = "0.0.dev0"
  return result.lstrip( 'v' )

#-------------------------------------------------------------------------
# get_long_description
#-------------------------------------------------------------------------

def get_long_description():
  here = path.abspath(path.dirname(__file__))
  with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    return f.read()

#-------------------------------------------------------------------------
# setup
#-------------------------------------------------------------------------

setup(

  name             = 'matfp',
  version          = get_version(),
  description      = 'Free products, unique factorization and census of small matroids',
  long_description = get_long_description(),
  long_description_content_type = 'text/markdown',

  # BSD 3-Clause License:
  # - http://choosealicense.com/licenses/bsd-3-clause
  # - http://opensource.org/licenses/BSD-3-Clause

  license='BSD',

  # See https://pypi.python.org/pypi?%3Aaction=list_classifiers

  classifiers=[
    'Development Status :: 3 - Alpha',
    'License :: OSI Approved :: BSD License',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Operating System :: MacOS :: MacOS X',
    'Operating System :: POSIX :: Linux',
  ],

  python_requires = '>=3.8',

  packages = find_packages(
    exclude=['examples', 'examples.*']
  ),

  install_requires = [
    'pytest',
    'pytest-xdist',
    'pyparsing>=3.1',
    'numpy',
    'networkx',
  ],

  entry_points = {
    'console_scripts' : [
      'matfp = matfp.tools.cli.matfp_cli:main',
    ],
  },

)

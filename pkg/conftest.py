import random

import pytest

def pytest_addoption(parser):
  parser.addoption( "--slow", action="store_true",
                    help="run the full-size census and sweep tests" )
  parser.addoption( "--seed", action="store", default=0xfeed,
                    type=lambda x: int( x, 0 ),
                    help="seed for randomized sweeps" )
  parser.addoption( "--samples", action="store", default=None, type=int,
                    help="override random sample counts" )

def pytest_configure(config):
  config.addinivalue_line( "markers", "slow: needs --slow to run" )

@pytest.fixture
def seed(request):
  """Seed for randomized sweeps."""
  return request.config.option.seed

@pytest.fixture
def rng(seed):
  """Seeded random source for one test."""
  return random.Random( seed )

@pytest.fixture
def samples(request):
  """Random sample count, 20 unless overridden on the command line."""
  return request.config.option.samples or 20

@pytest.fixture(scope="session")
def catalog(request):
  """Catalog of all classes up to 6 elements, or 7 with --slow."""
  from matfp.tools.enumeration.Catalog import enumerate_up_to
  return enumerate_up_to( 7 if request.config.option.slow else 6 )

def pytest_runtest_setup(item):
  if 'slow' in item.keywords and not item.config.option.slow:
    pytest.skip("needs --slow")

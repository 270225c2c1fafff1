"""Partitions, abaci, blocks of (multi)partitions and their weights."""

from .abacus import e_core, e_quotient, e_weight, is_core, x_vector, y_vector
from .blocks import BlockVector, block_of_partition, block_weight, is_block, parse_block
from .config import Config, Limits
from .errors import CoreBlocksError, DomainError, HypothesisError, ParseError, ResourceLimitError
from .multipartition import Multipartition, SubsetTuple, multi_weight
from .partition_core import Partition, parse_partition

__version__ = "0.1.0"

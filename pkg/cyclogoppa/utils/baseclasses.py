# Collection of base classes for cyclogoppa Packages

# Copyright (C) 2026 cyclogoppa developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
The :code:`cyclogoppa.utils.baseclasses` module contains abstract base classes for the
various modules. When creating new modules, these classes should be used to maintain
a common interface and pass information related to each model.
"""


from abc import ABC
from concurrent.futures import ThreadPoolExecutor
import os

import numpy as np

from cyclogoppa.codes.linbin import BinaryCode, expand_to_bits
from cyclogoppa.utils.citations import *
from cyclogoppa.utils.exceptions import CycloGoppaError


class ParallelModuleBase(ABC):
    """Base class for modules that can shard work across threads.

    This class mainly handles setting thread usage. Work handed to
    :meth:`map_shards` must be independent per shard; results come back in
    shard order so outputs never depend on :code:`num_threads`.

    args:
        num_threads (int, optional): Number of worker threads. If :code:`None`,
            use :code:`os.cpu_count()`. Default is 1.

    """

    def attributes_ParallelModuleBase(self):
        """
        attributes:
            num_threads (int): Number of worker threads used for sharded work.

        """
        pass

    def __init__(self, *args, num_threads=1, **kwargs):
        self.sanity_check_threads(num_threads)
        if num_threads is None:
            num_threads = os.cpu_count() or 1
        self.num_threads = num_threads

    @property
    def citation(self):
        """Return citations related to this module"""
        return goppa_citation + berlekamp_citation + galois_software_citation

    @classmethod
    def __call__(*args, **kwargs):
        """Method to call the module"""
        raise NotImplementedError

    def sanity_check_threads(self, num_threads):
        """Check the requested thread count

        args:
            num_threads (int or None): Requested number of threads.

        Raises:
            ValueError: The thread count is not a positive integer.

        """
        if num_threads is None:
            return
        if not isinstance(num_threads, (int, np.integer)) or num_threads < 1:
            raise ValueError(
                "num_threads must be a positive integer or None, got {}.".format(
                    num_threads
                )
            )

    def map_shards(self, func, shards):
        """Apply :code:`func` to every shard, possibly in parallel.

        args:
            func (callable): Function of one shard.
            shards (list): Independent work items.

        returns:
            list: :code:`func(shard)` for each shard, in input order.

        """
        shards = list(shards)
        if self.num_threads == 1 or len(shards) < 2:
            return [func(shard) for shard in shards]

        with ThreadPoolExecutor(max_workers=self.num_threads) as executor:
            return list(executor.map(func, shards))


class GoppaCodeBase(ABC):
    """Base class used for Goppa code variants.

    This class provides the common path from a Goppa instance to a binary code:
    the child class supplies the parity-check matrix over the working field and
    this class expands it over GF(2) and takes the kernel.

    args:
        check_even_weight (bool, optional): If True, assert the even-weight law
            on the generator rows after construction. Only meaningful for
            variants that carry the all-ones parity row. Default is True.

    """

    # number of coordinates added to the support length
    extra_positions = 0
    # whether the parity rows include the all-ones type row
    even_weight = False

    def __init__(self, *args, check_even_weight=True, **kwargs):
        self.check_even_weight = check_even_weight

    def attributes_GoppaCodeBase(self):
        """
        attributes:
            extra_positions (int): Coordinates added beyond the support length.
            even_weight (bool): If True, every codeword has even weight.

        """
        pass

    @property
    def citation(self):
        """Return citation for this class"""
        return goppa_citation + berlekamp_citation + macwilliams_sloane_citation

    @classmethod
    def parity_check(self, *args, **kwargs):
        """Parity-check generator

        @classmethod that requires a child class to have a parity_check method.

        returns:
            2D galois.FieldArray: parity-check matrix over the working field.

        raises:
            NotImplementedError: The child class does not have this method.

        """
        raise NotImplementedError

    def length(self, instance):
        """Code length for an instance."""
        return len(instance.support) + self.extra_positions

    def __call__(self, instance):
        """Common call function for Goppa code variants.

        args:
            instance (GoppaInstance): Validated Goppa instance.

        returns:
            :class:`cyclogoppa.codes.linbin.BinaryCode`: the binary code.

        Raises:
            CycloGoppaError: The child parity check rejects the instance or the
                even-weight law fails.

        """
        H = self.parity_check(instance)
        code = BinaryCode.from_parity_check(expand_to_bits(H))

        if self.even_weight and self.check_even_weight and code.k > 0:
            if np.any(code.G.sum(axis=1) % 2):
                raise CycloGoppaError(
                    "Generator row of odd weight in a {} code.".format(
                        type(self).__name__
                    )
                )

        return code

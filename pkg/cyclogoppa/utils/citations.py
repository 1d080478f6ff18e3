# Collection of citations for modules in cyclogoppa package

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
:code:`cyclogoppa.utils.citations`:

This module is used to collect citations for all modules in the package. This
module is then imported to add citations to module classes using their :code:`citation`
attribute.
"""

goppa_citation = """
@article{Goppa:1970,
    author = "Goppa, Valery D.",
    title = "{A new class of linear correcting codes}",
    journal = "Problemy Peredachi Informatsii",
    volume = "6",
    number = "3",
    pages = "24--30",
    year = "1970"
}
"""

berlekamp_citation = """
@article{Berlekamp:1973,
    author = "Berlekamp, Elwyn R.",
    title = "{Goppa codes}",
    journal = "IEEE Transactions on Information Theory",
    volume = "19",
    number = "5",
    pages = "590--592",
    doi = "10.1109/TIT.1973.1055088",
    year = "1973"
}
"""

macwilliams_sloane_citation = """
@book{MacWilliams:1977,
    author = "MacWilliams, F. Jessie and Sloane, Neil J. A.",
    title = "{The Theory of Error-Correcting Codes}",
    publisher = "North-Holland",
    address = "Amsterdam",
    year = "1977"
}
"""

galois_software_citation = """
@software{Hostetter:2020galois,
    author = "Hostetter, Matt",
    title = "{Galois: A performant NumPy extension for Galois fields}",
    url = "https://github.com/mhostetter/galois",
    year = "2020"
}
"""

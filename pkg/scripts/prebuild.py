fp_loc = __file__.split("scripts/prebuild.py")[0]

# setup version file
with open(fp_loc + "README.md", "r") as fh:
    lines = fh.readlines()

version_string = None
for line in lines:
    if line.startswith("Current Version"):
        version_string = line.split("Current Version: ")[1].split("\n")[0].strip()

if version_string is None:
    raise ValueError("README.md has no 'Current Version: ' line.")

with open(fp_loc + "cyclogoppa/_version.py", "w") as f:
    f.write("__version__ = '{}'\n".format(version_string))

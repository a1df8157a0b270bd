"""
Batch use through the command line front end
============================================

The same computations over JSON; here the ``run`` entry point is called
in-process with byte streams instead of a shell pipe.
"""

import io
import json

from quatcross import cli


def call(args, doc):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(args, io.BytesIO(json.dumps(doc).encode()), out, err)
    return code, out.getvalue().strip() or err.getvalue().strip()


std = [[0, 0, 0, 0], [1, 0, 0, 0], "inf"]
print(call(["crossratio"], std + [[0, 1, 0, 0]]))
print(call(["cospherical"], std + [[0, 1, 0, 0], [0, 0, 1, 0]]))
print(call(["solve", "--points", "4"], {"src": std + [[0, 1, 0, 0]], "dst": std + [[0, 0, 1, 0]]}))
# infeasible: exit code 2 and a reason on stderr
print(call(["solve", "--points", "4"], {"src": std + [[0, 1, 0, 0]], "dst": std + [[0, 2, 0, 0]]}))
print(call(["selftest", "--seed", "1"], None))

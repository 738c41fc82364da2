"""The CLI invocations exercised end to end, with their expected exit codes.
Paths are relative to tests/data."""

CORPUS = [
    (["validate", "kt.ring.json"], 0),
    (["validate", "cp2.ring.json"], 0),
    (["validate", "kt.lie.json"], 0),
    (["validate", "l1l1.gmodule.json"], 0),
    (["validate", "chain.bmodule.json"], 0),
    (["validate", "broken.ring.json"], 2),
    (["validate", "malformed.json"], 2),
    (["validate", "missing.json"], 2),
    (["filtration", "kt.ring.json", "--class", "omega"], 0),
    (["filtration", "chain.bmodule.json"], 0),
    (["filtration", "l1.gmodule.json"], 0),
    (["filtration", "filiform.ring.json", "--class", "omega"], 0),
    (["lefschetz", "kt.ring.json", "--class", "omega"], 1),
    (["lefschetz", "cp2.ring.json", "--class", "h"], 0),
    (["lefschetz", "filiform.ring.json", "--class", "omega"], 1),
    (["lefschetz", "kt.ring.json", "--class", "nope"], 2),
    (["ce", "kt.lie.json"], 0),
    (["ce", "filiform.lie.json"], 0),
    (["ce", "heis3.lie.json"], 0),
    (["ce", "kt.ring.json"], 2),
    (["blowup", "kt.ring.json", "--class", "omega", "--ambient", "5", "--codim", "6"], 0),
    (["blowup", "kt.ring.json", "--class", "omega", "--ambient", "5", "--codim", "4"], 2),
    (["certify", "cp2.ring.json", "--class", "h", "--base-betti", "1,0,1"], 0),
    (["certify", "kt.ring.json", "--class", "omega", "--base-betti", "1,0,2,0,1"], 0),
    (["certify", "filiform.ring.json", "--class", "omega", "--base-betti", "1,0,1"], 1),
    (["certify", "kt.ring.json", "--class", "omega", "--base-betti", "2,0,1"], 2),
    (["certify", "kt.ring.json", "--class", "omega", "--base-betti", "1,x"], 2),
    (["decompose", "l1l1.gmodule.json"], 0),
    (["decompose", "l1.gmodule.json"], 0),
    (["decompose", "chain.bmodule.json"], 2),
    (["catalog", "list"], 0),
    (["catalog", "get", "kodaira-thurston"], 0),
    (["catalog", "get", "cp3"], 0),
    (["catalog", "get", "unknown"], 2),
    (["frobnicate"], 2),
]

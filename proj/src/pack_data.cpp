#include "latmorph/regression_pack.hpp"

namespace latmorph {

const std::string& embedded_pack_text() {
  static const std::string text = R"PACK({
 "counterexamples": [
  {
   "name": "cross-in-square",
   "b1": ".#.\n#o#\n.#.",
   "b2": "###\n#o#\n###",
   "pixels": {
    "rect": {
     "lo": [
      0,
      0
     ],
     "hi": [
      5,
      5
     ]
    }
   },
   "image": "0 0 0 0 0 0\n0 0 1 1 1 0\n0 0 1 1 1 0\n0 1 1 1 1 0\n0 0 1 0 0 0\n0 0 0 0 0 0\n",
   "expect": {
    "subset": true,
    "positive": false,
    "negative": false,
    "shift": false,
    "whole_space": false,
    "weak_positive": false,
    "weak_negative": false,
    "positive_at": {
     "x": [
      0,
      0
     ],
     "b2": [
      1,
      1
     ]
    },
    "negative_at": {
     "x": [
      0,
      0
     ],
     "b2": [
      -1,
      -1
     ]
    },
    "whole_space_at": [
     -1,
     -1
    ],
    "violation_at": [
     4,
     4
    ],
    "oracle": {
     "pixels": {
      "rect": {
       "lo": [
        1,
        1
       ],
       "hi": [
        5,
        5
       ]
      }
     },
     "cap": 25,
     "opening": false
    },
    "grids": {
     "erosion_b1": "0 0 0 0 0 0\n0 0 0 0 0 0\n0 0 0 1 0 0\n0 0 1 0 0 0\n0 0 0 0 0 0\n0 0 0 0 0 0\n",
     "opening_b1": "0 0 0 0 0 0\n0 0 0 1 0 0\n0 0 1 1 1 0\n0 1 1 1 0 0\n0 0 1 0 0 0\n0 0 0 0 0 0\n",
     "erosion_b2": "0 0 0 0 0 0\n0 0 0 0 0 0\n0 0 0 1 0 0\n0 0 0 0 0 0\n0 0 0 0 0 0\n0 0 0 0 0 0\n",
     "opening_b2": "0 0 0 0 0 0\n0 0 1 1 1 0\n0 0 1 1 1 0\n0 0 1 1 1 0\n0 0 0 0 0 0\n0 0 0 0 0 0\n"
    }
   }
  },
  {
   "name": "not-a-subset",
   "b1": "#\no",
   "b2": ".#\no#",
   "pixels": {
    "points": [
     [
      0,
      0
     ],
     [
      1,
      0
     ]
    ]
   },
   "expect": {
    "subset": false,
    "positive": false,
    "negative": false,
    "shift": false,
    "weak_positive": true,
    "weak_negative": true,
    "positive_at": {
     "x": [
      0,
      0
     ],
     "b2": [
      0,
      0
     ]
    },
    "negative_at": {
     "x": [
      0,
      0
     ],
     "b2": [
      0,
      0
     ]
    },
    "oracle": {
     "opening": true,
     "closing": true
    }
   }
  },
  {
   "name": "positive-only",
   "b1": "o\n#",
   "b2": "#\n#\n.\no\n#",
   "pixels": {
    "points": [
     [
      0,
      0
     ],
     [
      0,
      1
     ],
     [
      0,
      3
     ]
    ]
   },
   "expect": {
    "subset": true,
    "positive": true,
    "negative": false,
    "shift": false,
    "whole_space": true,
    "weak_positive": true,
    "weak_negative": true,
    "negative_at": {
     "x": [
      0,
      3
     ],
     "b2": [
      0,
      2
     ]
    },
    "oracle": {
     "opening": true,
     "closing": true
    }
   }
  },
  {
   "name": "bent-row",
   "b1": "o#",
   "b2": "##\no#",
   "pixels": {
    "points": [
     [
      0,
      0
     ],
     [
      1,
      1
     ],
     [
      2,
      1
     ],
     [
      3,
      1
     ],
     [
      4,
      1
     ],
     [
      5,
      1
     ]
    ]
   },
   "image": "_ 1 0 0 0 0\n1 _ _ _ _ _\n",
   "expect": {
    "subset": true,
    "positive": false,
    "negative": false,
    "shift": false,
    "whole_space": true,
    "weak_positive": true,
    "weak_negative": false,
    "positive_at": {
     "x": [
      0,
      0
     ],
     "b2": [
      1,
      1
     ]
    },
    "negative_at": {
     "x": [
      1,
      1
     ],
     "b2": [
      1,
      1
     ]
    },
    "violation_at": [
     1,
     1
    ],
    "oracle": {
     "opening": false,
     "closing": true
    },
    "grids": {
     "erosion_b1": "_ 0 0 0 0 0\n1 _ _ _ _ _\n",
     "opening_b1": "_ 0 0 0 0 0\n1 _ _ _ _ _\n",
     "erosion_b2": "_ 0 0 0 0 0\n1 _ _ _ _ _\n",
     "opening_b2": "_ 1 0 0 0 0\n1 _ _ _ _ _\n"
    }
   }
  },
  {
   "name": "restricted-only",
   "b1": "#\no",
   "b2": "##\no.",
   "pixels": {
    "rect": {
     "lo": [
      0,
      0
     ],
     "hi": [
      5,
      0
     ]
    }
   },
   "expect": {
    "subset": true,
    "positive": true,
    "negative": true,
    "shift": true,
    "whole_space": false,
    "weak_positive": true,
    "weak_negative": true,
    "whole_space_at": [
     1,
     1
    ],
    "oracle": {
     "opening": true,
     "closing": true
    }
   }
  },
  {
   "name": "diagonal-pair",
   "b1": "..#\n...\no..",
   "b2": "..#\n...\no.#\n...\n#..",
   "pixels": {
    "rect": {
     "lo": [
      0,
      0
     ],
     "hi": [
      4,
      2
     ]
    }
   },
   "image": "0 0 1 0 0\n0 0 0 0 0\n1 0 1 0 1\n",
   "expect": {
    "subset": true,
    "positive": false,
    "negative": false,
    "shift": false,
    "whole_space": true,
    "weak_positive": false,
    "weak_negative": false,
    "positive_at": {
     "x": [
      0,
      1
     ],
     "b2": [
      2,
      0
     ]
    },
    "negative_at": {
     "x": [
      2,
      0
     ],
     "b2": [
      2,
      0
     ]
    },
    "oracle": {
     "opening": false,
     "closing": false
    },
    "grids": {
     "erosion_b1": "0 0 1 0 0\n0 0 0 0 0\n1 0 0 0 1\n",
     "opening_b1": "0 0 1 0 0\n0 0 0 0 0\n1 0 0 0 1\n",
     "erosion_b2": "0 0 0 0 0\n0 0 0 0 0\n1 0 0 0 1\n",
     "opening_b2": "0 0 1 0 0\n0 0 0 0 0\n1 0 1 0 1\n"
    }
   }
  },
  {
   "name": "weak-only",
   "b1": "o\n#",
   "b2": "o#\n#.",
   "pixels": {
    "points": [
     [
      0,
      0
     ],
     [
      1,
      0
     ],
     [
      0,
      -1
     ]
    ]
   },
   "expect": {
    "subset": true,
    "positive": false,
    "negative": false,
    "shift": false,
    "whole_space": false,
    "weak_positive": true,
    "weak_negative": true,
    "positive_at": {
     "x": [
      0,
      0
     ],
     "b2": [
      1,
      0
     ]
    },
    "negative_at": {
     "x": [
      1,
      0
     ],
     "b2": [
      1,
      0
     ]
    },
    "whole_space_at": [
     1,
     0
    ],
    "oracle": {
     "opening": true,
     "closing": true
    }
   }
  }
 ],
 "sequences": [
  {
   "name": "squares-3-5",
   "elements": [
    "o",
    "###\n#o#\n###",
    "#####\n#####\n##o##\n#####\n#####"
   ],
   "scope": "whole-space",
   "relation": "S",
   "verdict": true
  },
  {
   "name": "diamonds",
   "elements": [
    "o",
    ".#.\n#o#\n.#.",
    "..#..\n.###.\n##o##\n.###.\n..#.."
   ],
   "scope": "whole-space",
   "relation": "S",
   "verdict": true
  },
  {
   "name": "square-to-wide",
   "elements": [
    "o",
    "###\n#o#\n###",
    "#####\n##o##\n#####"
   ],
   "scope": "whole-space",
   "relation": "S",
   "verdict": true
  },
  {
   "name": "growing-squares",
   "elements": [
    "o",
    "##\no#",
    "###\n#o#\n###",
    "####\n####\n#o##\n####"
   ],
   "scope": "whole-space",
   "relation": "S",
   "verdict": true
  },
  {
   "name": "arrow",
   "elements": [
    "o",
    ".#..\n#o##\n.#..",
    "..#..\n.####\n#o##.\n.#..."
   ],
   "scope": "whole-space",
   "relation": "S",
   "verdict": true
  },
  {
   "name": "staircase",
   "elements": [
    "o",
    "#.\no#",
    "#..\n##.\no##"
   ],
   "scope": "whole-space",
   "relation": "S",
   "verdict": true
  },
  {
   "name": "square-to-offset",
   "elements": [
    "o",
    "###\n#o#\n###",
    "####\n#o##\n####"
   ],
   "scope": "whole-space",
   "relation": "S",
   "verdict": true
  }
 ]
})PACK";
  return text;
}

}  // namespace latmorph

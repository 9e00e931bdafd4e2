#pragma once

#include "bsaf/core.hpp"

namespace fixtures {

using bsaf::Framework;
using bsaf::FrameworkBuilder;

// Six arguments, collective attack {d,e}→f and joint support {a,b}→c.
inline Framework example1() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "d", "e", "f"})
        .attack({"f"}, "c")
        .attack({"d", "e"}, "f")
        .attack({"c"}, "d")
        .support({"a", "b"}, "c")
        .build();
}

// SETAF with cut {a,b,c} and two collective attacks across it.
inline Framework setaf() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "x", "y", "z"})
        .attack({"a"}, "c")
        .attack({"c"}, "a")
        .attack({"b"}, "b")
        .attack({"a", "z"}, "x")
        .attack({"b", "z"}, "y")
        .build();
}

// Cut {a,b,d}: the crossing attack {a,w}→t closes to {a,b,w}→t.
inline Framework frame_g() {
    return FrameworkBuilder()
        .args({"a", "b", "d", "t", "w"})
        .attack({"a"}, "a")
        .attack({"d"}, "b")
        .attack({"a", "w"}, "t")
        .support({"a"}, "b")
        .build();
}

// Cut {d}: x is defeated, y and z jointly support it.
inline Framework frame_h() {
    return FrameworkBuilder()
        .args({"d", "x", "y", "z"})
        .attack({"d"}, "x")
        .support({"y", "z"}, "x")
        .build();
}

// Cut {c}: c is self-attacking, so {c,w}→v stays undecided.
inline Framework frame_i() {
    return FrameworkBuilder()
        .args({"c", "u", "v", "w"})
        .attack({"c"}, "c")
        .attack({"c", "w"}, "v")
        .attack({"v"}, "u")
        .support({"v", "w"}, "u")
        .build();
}

// Cut {a,b}: grounded splitting finds nothing although grd = {{a,d,e}}.
inline Framework grounded_counterexample() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "d", "e"})
        .attack({"a"}, "b")
        .attack({"b"}, "a")
        .attack({"a"}, "c")
        .attack({"c"}, "e")
        .support({"d"}, "e")
        .build();
}

// Cut {a,b} with the backward support c→b.
inline Framework support_split1() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "d"})
        .attack({"b"}, "a")
        .attack({"d"}, "c")
        .support({"c"}, "b")
        .build();
}

// Cut {a,b} with the forward support b→c.
inline Framework forward_support() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "d"})
        .attack({"b"}, "a")
        .attack({"d"}, "c")
        .support({"b"}, "c")
        .build();
}

// Cut {a,b}: c1 and c2 must not be accepted together once b is out.
inline Framework constraints() {
    return FrameworkBuilder()
        .args({"a", "b", "c1", "c2"})
        .attack({"a"}, "b")
        .support({"c1", "c2"}, "b")
        .build();
}

// Cut {a,b}: the closure of c contains b, which a defeats.
inline Framework type1() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "d"})
        .attack({"a"}, "b")
        .attack({"c"}, "d")
        .support({"c"}, "b")
        .build();
}

// Cut {a,b,e}: support {c,e}→b.
inline Framework type2() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "d", "e"})
        .attack({"a"}, "b")
        .attack({"c"}, "d")
        .support({"c", "e"}, "b")
        .build();
}

// Cut {a,c,d}: preferred support splitting misses {b,d}.
inline Framework preferred_counterexample() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "d"})
        .attack({"d"}, "c")
        .support({"a", "b"}, "c")
        .build();
}

// Cut {a,b}: cl({c}) = {a,b,c} reaches a, which E1 = {b} attacks, through a
// support whose head b is already in E1.
inline Framework chain_defeat() {
    return FrameworkBuilder()
        .args({"a", "b", "c"})
        .attack({"b"}, "a")
        .attack({"c"}, "c")
        .support({"b", "c"}, "a")
        .support({"c"}, "b")
        .build();
}

// Cut {a,b,c,d} with both crossing attacks and crossing supports.
inline Framework combined() {
    return FrameworkBuilder()
        .args({"a", "b", "c", "d", "x", "y", "z", "w"})
        .attack({"a"}, "b")
        .attack({"d"}, "d")
        .attack({"c"}, "x")
        .attack({"d", "z"}, "w")
        .attack({"w"}, "x")
        .support({"c"}, "b")
        .support({"x"}, "b")
        .support({"y"}, "d")
        .build();
}

}  // namespace fixtures

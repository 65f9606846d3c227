#pragma once

// Synthetic corpus of small, well-named functions in C, C++, Java and
// Python, each paired with a docstring. Used to exercise the pipeline end to
// end and by the evaluation harness when no real dataset is at hand.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anon/golden.hpp"
#include "anon/naming.hpp"
#include "anon/profile.hpp"
#include "anon/record.hpp"

namespace anon::sample {

struct Noun {
    std::string_view singular;
    std::string_view plural;
};

inline const std::vector<Noun>& nouns() {
    static const std::vector<Noun> list = {
        {"price", "prices"},        {"score", "scores"},          {"temperature", "temperatures"},
        {"salary", "salaries"},     {"order", "orders"},          {"packet", "packets"},
        {"reading", "readings"},    {"invoice", "invoices"},      {"ticket", "tickets"},
        {"sensor", "sensors"},      {"voltage", "voltages"},      {"budget", "budgets"},
        {"grade", "grades"},        {"weight", "weights"},        {"balance", "balances"},
        {"sample", "samples"},      {"message", "messages"},      {"vertex", "vertices"},
        {"pixel", "pixels"},        {"account", "accounts"},      {"student", "students"},
        {"employee", "employees"},  {"flight", "flights"},        {"reservation", "reservations"},
        {"shipment", "shipments"},
    };
    return list;
}

/// One function in four languages. Code uses `$name$` for identifiers that
/// vary between the two naming styles, `{item}`/`{items}`/`{ITEM}` for the
/// domain noun, and `@@MACRO@@` for C-family type plumbing (see expand_cfam).
struct TaskTemplate {
    std::string_view id;
    std::string_view doc;
    /// placeholder -> {style 0, style 1}, snake_case.
    std::vector<std::pair<std::string_view, std::pair<std::string_view, std::string_view>>> names;
    std::string_view python;
    std::string_view cfam;  // shared C/C++/Java body unless overridden
    std::string_view c = {};
    std::string_view cpp = {};
    std::string_view java = {};
    /// Arguments for a standalone Python call; empty when the function needs
    /// helpers the unit does not define.
    std::string_view python_args = {};
    /// Excluded from clone groups (kept for syntax coverage only).
    bool syntax_extra = false;
};

// clang-format off
inline const std::vector<TaskTemplate>& tasks() {
    static const std::vector<TaskTemplate> list = {
{"total", "Compute the total of all {items} in the list.",
 {{"fn", {"total_{items}", "sum_of_{items}"}}, {"xs", {"{items}", "{item}_values"}}, {"acc", {"total", "running_sum"}},
  {"x", {"{item}", "entry"}}, {"i", {"i", "idx"}}},
R"(def $fn$($xs$):
    $acc$ = 0
    for $x$ in $xs$:
        $acc$ += $x$
    return $acc$
)",
R"(@@S@@@@D@@ $fn$(@@ARR(xs)@@) {
    @@D@@ $acc$ = 0;
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) {
        $acc$ += $xs$[$i$];
    }
    return $acc$;
}
)", {}, {}, {}, "[3, 1, 4, 1, 5]"},

{"largest", "Return the largest {item} from the given {items}.",
 {{"fn", {"find_max_{item}", "largest_{item}"}}, {"xs", {"{items}", "observed"}}, {"best", {"best", "highest"}},
  {"x", {"{item}", "candidate"}}, {"i", {"i", "pos"}}},
R"(def $fn$($xs$):
    $best$ = $xs$[0]
    for $x$ in $xs$[1:]:
        if $x$ > $best$:
            $best$ = $x$
    return $best$
)",
R"(@@S@@@@D@@ $fn$(@@ARR(xs)@@) {
    @@D@@ $best$ = $xs$[0];
    for (@@I@@ $i$ = 1; $i$ < @@LEN(xs)@@; ++$i$) {
        if ($xs$[$i$] > $best$) {
            $best$ = $xs$[$i$];
        }
    }
    return $best$;
}
)", {}, {}, {}, "[2.5, 9.0, 4.5]"},

{"average", "Calculate the average {item} across all {items}, returning zero when there are none.",
 {{"fn", {"average_{item}", "mean_{item}"}}, {"xs", {"{items}", "collected"}}, {"acc", {"total", "accumulated"}},
  {"i", {"i", "k"}}},
R"(def $fn$($xs$):
    if not $xs$:
        return 0.0
    $acc$ = sum($xs$)
    return $acc$ / len($xs$)
)",
R"(@@S@@@@D@@ $fn$(@@ARR(xs)@@) {
    if (@@LEN(xs)@@ == 0) {
        return 0.0;
    }
    @@D@@ $acc$ = 0.0;
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) $acc$ += $xs$[$i$];
    return $acc$ / @@LEN(xs)@@;
}
)", {}, {}, {}, "[1.0, 2.0, 6.0]"},

{"count_above", "Count how many {items} exceed the given threshold.",
 {{"fn", {"count_{items}_above", "num_high_{items}"}}, {"xs", {"{items}", "measured"}}, {"t", {"threshold", "limit"}},
  {"n", {"count", "hits"}}, {"x", {"{item}", "value"}}, {"i", {"i", "j"}}},
R"(def $fn$($xs$, $t$):
    $n$ = 0
    for $x$ in $xs$:
        if $x$ > $t$:
            $n$ += 1
    return $n$
)",
R"(@@S@@@@I@@ $fn$(@@ARR(xs)@@, @@D@@ $t$) {
    @@I@@ $n$ = 0;
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) {
        if ($xs$[$i$] > $t$) {
            $n$++;
        }
    }
    return $n$;
}
)", {}, {}, {}, "[5, 12, 7, 30], 6"},

{"filter_above", "Collect the {items} that are strictly greater than a minimum value.",
 {{"fn", {"filter_{items}_above", "select_large_{items}"}}, {"xs", {"{items}", "pool"}}, {"t", {"minimum", "floor_value"}},
  {"out", {"result", "kept"}}, {"x", {"{item}", "elem"}}, {"n", {"n", "written"}}, {"i", {"i", "src"}}},
R"(def $fn$($xs$, $t$):
    $out$ = [$x$ for $x$ in $xs$ if $x$ > $t$]
    return $out$
)", {},
R"(static int $fn$(const double *$xs$, int $xs$_len, double $t$, double *$out$) {
    int $n$ = 0;
    for (int $i$ = 0; $i$ < $xs$_len; $i$++) {
        if ($xs$[$i$] > $t$) {
            $out$[$n$++] = $xs$[$i$];
        }
    }
    return $n$;
}
)",
R"(inline std::vector<double> $fn$(const std::vector<double>& $xs$, double $t$) {
    std::vector<double> $out$;
    std::copy_if($xs$.begin(), $xs$.end(), std::back_inserter($out$),
                 [$t$](double $x$) { return $x$ > $t$; });
    return $out$;
}
)",
R"(public static List<Double> $fn$(double[] $xs$, double $t$) {
    List<Double> $out$ = new ArrayList<>();
    for (double $x$ : $xs$) {
        if ($x$ > $t$) {
            $out$.add($x$);
        }
    }
    return $out$;
}
)", "[3, 8, 1, 9], 2.5"},

{"index_of", "Find the position of a target {item} in the {items}, or -1 if it is missing.",
 {{"fn", {"index_of_{item}", "locate_{item}"}}, {"xs", {"{items}", "haystack"}}, {"t", {"target", "wanted"}},
  {"i", {"i", "where"}}, {"x", {"{item}", "probe"}}},
R"(def $fn$($xs$, $t$):
    for $i$, $x$ in enumerate($xs$):
        if $x$ == $t$:
            return $i$
    return -1
)",
R"(@@S@@@@I@@ $fn$(@@ARR(xs)@@, @@D@@ $t$) {
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) {
        if ($xs$[$i$] == $t$) {
            return $i$;
        }
    }
    return -1;
}
)", {}, {}, {}, "[4, 8, 15, 16], 15"},

{"reverse", "Reverse the order of the {items} in place.",
 {{"fn", {"reverse_{items}", "flip_{items}_order"}}, {"xs", {"{items}", "sequence"}}, {"lo", {"left", "front"}},
  {"hi", {"right", "back"}}, {"tmp", {"saved", "held"}}},
R"(def $fn$($xs$):
    $lo$, $hi$ = 0, len($xs$) - 1
    while $lo$ < $hi$:
        $xs$[$lo$], $xs$[$hi$] = $xs$[$hi$], $xs$[$lo$]
        $lo$ += 1
        $hi$ -= 1
    return $xs$
)",
R"(@@S@@void $fn$(@@MUT(xs)@@) {
    @@I@@ $lo$ = 0;
    @@I@@ $hi$ = @@LEN(xs)@@ - 1;
    while ($lo$ < $hi$) {
        @@D@@ $tmp$ = $xs$[$lo$];
        $xs$[$lo$] = $xs$[$hi$];
        $xs$[$hi$] = $tmp$;
        $lo$++;
        $hi$--;
    }
}
)", {}, {}, {}, "[1, 2, 3, 4]"},

{"bubble_sort", "Sort the {items} in ascending order using bubble sort.",
 {{"fn", {"bubble_sort_{items}", "order_{items}"}}, {"xs", {"{items}", "unsorted"}}, {"n", {"n", "total_len"}},
  {"i", {"i", "outer_pass"}}, {"j", {"j", "inner_pos"}}, {"tmp", {"tmp", "swap_slot"}}},
R"(def $fn$($xs$):
    $n$ = len($xs$)
    for $i$ in range($n$):
        for $j$ in range(0, $n$ - $i$ - 1):
            if $xs$[$j$] > $xs$[$j$ + 1]:
                $xs$[$j$], $xs$[$j$ + 1] = $xs$[$j$ + 1], $xs$[$j$]
    return $xs$
)",
R"(@@S@@void $fn$(@@MUT(xs)@@) {
    @@I@@ $n$ = @@LEN(xs)@@;
    for (@@I@@ $i$ = 0; $i$ < $n$ - 1; $i$++) {
        for (@@I@@ $j$ = 0; $j$ < $n$ - $i$ - 1; $j$++) {
            if ($xs$[$j$] > $xs$[$j$ + 1]) {
                @@D@@ $tmp$ = $xs$[$j$];
                $xs$[$j$] = $xs$[$j$ + 1];
                $xs$[$j$ + 1] = $tmp$;
            }
        }
    }
}
)", {}, {}, {}, "[5, 3, 9, 1]"},

{"binary_search", "Search a sorted array of {items} for a key using binary search.",
 {{"fn", {"binary_search_{items}", "bisect_{items}"}}, {"xs", {"sorted_{items}", "ordered"}}, {"t", {"key", "needle"}},
  {"lo", {"low", "start"}}, {"hi", {"high", "stop"}}, {"mid", {"mid", "middle"}}},
R"(def $fn$($xs$, $t$):
    $lo$, $hi$ = 0, len($xs$) - 1
    while $lo$ <= $hi$:
        $mid$ = ($lo$ + $hi$) // 2
        if $xs$[$mid$] == $t$:
            return $mid$
        if $xs$[$mid$] < $t$:
            $lo$ = $mid$ + 1
        else:
            $hi$ = $mid$ - 1
    return -1
)",
R"(@@S@@@@I@@ $fn$(@@ARR(xs)@@, @@D@@ $t$) {
    @@I@@ $lo$ = 0;
    @@I@@ $hi$ = @@LEN(xs)@@ - 1;
    while ($lo$ <= $hi$) {
        @@I@@ $mid$ = $lo$ + ($hi$ - $lo$) / 2;
        if ($xs$[$mid$] == $t$) return $mid$;
        if ($xs$[$mid$] < $t$) $lo$ = $mid$ + 1;
        else $hi$ = $mid$ - 1;
    }
    return -1;
}
)", {}, {}, {}, "[1, 3, 5, 7, 9, 11], 9"},

{"factorial", "Return the number of ways to arrange a group of {items}, computed as a factorial.",
 {{"fn", {"factorial_{items}", "arrangements_of_{items}"}}, {"n", {"count", "group_size"}}},
R"(def $fn$($n$):
    if $n$ <= 1:
        return 1
    return $n$ * $fn$($n$ - 1)
)",
R"(@@S@@long $fn$(@@I@@ $n$) {
    if ($n$ <= 1) {
        return 1;
    }
    return $n$ * $fn$($n$ - 1);
}
)", {}, {}, {}, "6"},

{"fibonacci", "Return the n-th Fibonacci number, modelling the growth of {items}.",
 {{"fn", {"fibonacci_{items}", "grow_{items}"}}, {"n", {"steps", "generations"}}, {"a", {"prev", "older"}},
  {"b", {"curr", "newer"}}, {"tmp", {"following", "upcoming"}}, {"i", {"i", "gen"}}},
R"(def $fn$($n$):
    $a$, $b$ = 0, 1
    for _ in range($n$):
        $a$, $b$ = $b$, $a$ + $b$
    return $a$
)",
R"(@@S@@long $fn$(@@I@@ $n$) {
    long $a$ = 0, $b$ = 1;
    for (@@I@@ $i$ = 0; $i$ < $n$; $i$++) {
        long $tmp$ = $a$ + $b$;
        $a$ = $b$;
        $b$ = $tmp$;
    }
    return $a$;
}
)", {}, {}, {}, "10"},

{"gcd", "Compute the greatest common divisor of two {item} quantities.",
 {{"fn", {"gcd_{items}", "common_divisor_{item}"}}, {"a", {"first", "lhs"}}, {"b", {"second", "rhs"}},
  {"tmp", {"remainder", "rest"}}},
R"(def $fn$($a$, $b$):
    while $b$:
        $a$, $b$ = $b$, $a$ % $b$
    return abs($a$)
)",
R"(@@S@@long $fn$(long $a$, long $b$) {
    while ($b$ != 0) {
        long $tmp$ = $a$ % $b$;
        $a$ = $b$;
        $b$ = $tmp$;
    }
    return $a$ < 0 ? -$a$ : $a$;
}
)", {}, {}, {}, "84, 36"},

{"is_prime", "Check whether the {item} identifier is a prime number.",
 {{"fn", {"is_prime_{item}", "{item}_is_prime"}}, {"n", {"number", "candidate"}}, {"i", {"divisor", "factor"}}},
R"(def $fn$($n$):
    if $n$ < 2:
        return False
    $i$ = 2
    while $i$ * $i$ <= $n$:
        if $n$ % $i$ == 0:
            return False
        $i$ += 1
    return True
)",
R"(@@S@@@@B@@ $fn$(long $n$) {
    if ($n$ < 2) return @@F@@;
    for (long $i$ = 2; $i$ * $i$ <= $n$; $i$++) {
        if ($n$ % $i$ == 0) return @@F@@;
    }
    return @@T@@;
}
)", {}, {}, {}, "97"},

{"clamp", "Clamp a {item} so that it stays between a lower and an upper bound.",
 {{"fn", {"clamp_{item}", "bound_{item}"}}, {"x", {"{item}", "raw_value"}}, {"lo", {"lower", "floor_limit"}},
  {"hi", {"upper", "ceiling_limit"}}},
R"(def $fn$($x$, $lo$, $hi$):
    if $x$ < $lo$:
        return $lo$
    if $x$ > $hi$:
        return $hi$
    return $x$
)",
R"(@@S@@@@D@@ $fn$(@@D@@ $x$, @@D@@ $lo$, @@D@@ $hi$) {
    if ($x$ < $lo$) {
        return $lo$;
    }
    if ($x$ > $hi$) {
        return $hi$;
    }
    return $x$;
}
)", {}, {}, {}, "42, 0, 10"},

{"normalize", "Scale every {item} by the largest one so the {items} fall between zero and one.",
 {{"fn", {"normalize_{items}", "rescale_{items}"}}, {"xs", {"{items}", "raw"}}, {"h", {"find_max_{item}", "largest_{item}"}},
  {"best", {"peak", "top"}}, {"x", {"{item}", "item"}}, {"i", {"i", "slot"}}},
R"(def $fn$($xs$):
    $best$ = $h$($xs$)
    if $best$ == 0:
        return $xs$
    return [$x$ / $best$ for $x$ in $xs$]
)",
R"(@@S@@void $fn$(@@MUT(xs)@@) {
    @@D@@ $best$ = $h$($xs$@@LENARG(xs)@@);
    if ($best$ == 0) return;
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) {
        $xs$[$i$] /= $best$;
    }
}
)"},

{"cumulative", "Build the running cumulative totals of the {items}.",
 {{"fn", {"cumulative_{items}", "running_{items}"}}, {"xs", {"{items}", "increments"}}, {"acc", {"running", "so_far"}},
  {"out", {"totals", "prefix"}}, {"x", {"{item}", "step"}}, {"i", {"i", "cursor"}}},
R"(def $fn$($xs$):
    $out$ = []
    $acc$ = 0
    for $x$ in $xs$:
        $acc$ += $x$
        $out$.append($acc$)
    return $out$
)",
R"(@@S@@void $fn$(@@MUT(xs)@@) {
    for (@@I@@ $i$ = 1; $i$ < @@LEN(xs)@@; $i$++) {
        $xs$[$i$] += $xs$[$i$ - 1];
    }
}
)", {}, {}, {}, "[1, 2, 3, 4]"},

{"histogram", "Count how often each {item} value occurs.",
 {{"fn", {"{item}_histogram", "tally_{items}"}}, {"xs", {"{items}", "observations"}}, {"out", {"counts", "frequency"}},
  {"x", {"{item}", "key"}}, {"n", {"buckets", "bins"}}, {"i", {"i", "b"}}},
R"(def $fn$($xs$):
    $out$ = {}
    for $x$ in $xs$:
        $out$[$x$] = $out$.get($x$, 0) + 1
    return $out$
)", {},
R"(static void $fn$(const int *$xs$, int $xs$_len, int *$out$, int $n$) {
    for (int $i$ = 0; $i$ < $n$; $i$++) $out$[$i$] = 0;
    for (int $i$ = 0; $i$ < $xs$_len; $i$++) {
        if ($xs$[$i$] >= 0 && $xs$[$i$] < $n$) $out$[$xs$[$i$]]++;
    }
}
)",
R"(inline std::map<double, int> $fn$(const std::vector<double>& $xs$) {
    std::map<double, int> $out$;
    for (double $x$ : $xs$) {
        ++$out$[$x$];
    }
    return $out$;
}
)",
R"(public static Map<Double, Integer> $fn$(double[] $xs$) {
    Map<Double, Integer> $out$ = new HashMap<>();
    for (double $x$ : $xs$) {
        $out$.merge($x$, 1, Integer::sum);
    }
    return $out$;
}
)", "[1, 2, 2, 3, 3, 3]"},

{"dedupe", "Remove duplicate {items} while keeping their first appearance order.",
 {{"fn", {"dedupe_{items}", "unique_{items}"}}, {"xs", {"{items}", "incoming"}}, {"seen", {"seen", "visited"}},
  {"out", {"distinct", "first_seen"}}, {"x", {"{item}", "current"}}, {"n", {"kept", "written"}},
  {"dup", {"duplicate", "repeated"}}, {"i", {"i", "r"}}, {"j", {"j", "w"}}},
R"(def $fn$($xs$):
    $seen$ = set()
    $out$ = []
    for $x$ in $xs$:
        if $x$ not in $seen$:
            $seen$.add($x$)
            $out$.append($x$)
    return $out$
)", {},
R"(static int $fn$(double *$xs$, int $xs$_len) {
    int $n$ = 0;
    for (int $i$ = 0; $i$ < $xs$_len; $i$++) {
        int $dup$ = 0;
        for (int $j$ = 0; $j$ < $n$; $j$++) {
            if ($xs$[$j$] == $xs$[$i$]) { $dup$ = 1; break; }
        }
        if (!$dup$) $xs$[$n$++] = $xs$[$i$];
    }
    return $n$;
}
)",
R"(inline std::vector<double> $fn$(const std::vector<double>& $xs$) {
    std::set<double> $seen$;
    std::vector<double> $out$;
    for (double $x$ : $xs$) {
        if ($seen$.insert($x$).second) $out$.push_back($x$);
    }
    return $out$;
}
)",
R"(public static List<Double> $fn$(List<Double> $xs$) {
    Set<Double> $seen$ = new HashSet<>();
    List<Double> $out$ = new ArrayList<>();
    for (Double $x$ : $xs$) {
        if ($seen$.add($x$)) {
            $out$.add($x$);
        }
    }
    return $out$;
}
)", "[3, 1, 3, 2, 1]"},

{"dot_product", "Compute the dot product of two vectors of {items}.",
 {{"fn", {"dot_{items}", "weighted_{item}_sum"}}, {"xs", {"{items}", "left_{items}"}}, {"ys", {"weights", "right_{items}"}},
  {"a", {"p", "u"}}, {"b", {"q", "w"}}, {"acc", {"acc", "projection"}}, {"i", {"i", "lane"}}},
R"(def $fn$($xs$, $ys$):
    return sum($a$ * $b$ for $a$, $b$ in zip($xs$, $ys$))
)",
R"(@@S@@@@D@@ $fn$(@@ARR(xs)@@, @@ARR(ys)@@) {
    @@D@@ $acc$ = 0;
    @@I@@ $i$ = 0;
    while ($i$ < @@LEN(xs)@@ && $i$ < @@LEN(ys)@@) {
        $acc$ += $xs$[$i$] * $ys$[$i$];
        ++$i$;
    }
    return $acc$;
}
)", {}, {}, {}, "[1, 2, 3], [4, 5, 6]"},

{"moving_average", "Compute the moving average of the {items} over a window of recent values.",
 {{"fn", {"moving_average_{items}", "smooth_{items}"}}, {"xs", {"{items}", "series"}}, {"k", {"window", "span_len"}},
  {"out", {"averages", "smoothed"}}, {"acc", {"acc", "window_sum"}}, {"start", {"start", "origin"}}, {"i", {"i", "t"}}},
R"(def $fn$($xs$, $k$):
    $out$ = []
    for $i$ in range(len($xs$) - $k$ + 1):
        $out$.append(sum($xs$[$i$:$i$ + $k$]) / $k$)
    return $out$
)",
R"(@@S@@@@D@@ $fn$(@@ARR(xs)@@, @@I@@ $k$) {
    @@D@@ $acc$ = 0;
    @@I@@ $start$ = @@LEN(xs)@@ - $k$;
    if ($start$ < 0) $start$ = 0;
    for (@@I@@ $i$ = $start$; $i$ < @@LEN(xs)@@; $i$++) {
        $acc$ += $xs$[$i$];
    }
    return $acc$ / (@@LEN(xs)@@ - $start$);
}
)", {}, {}, {}, "[1, 2, 3, 4, 5], 2"},

{"scale", "Multiply every {item} by a constant factor.",
 {{"fn", {"scale_{items}", "multiply_{items}"}}, {"xs", {"{items}", "inputs"}}, {"k", {"factor", "multiplier"}},
  {"x", {"{item}", "v"}}, {"i", {"i", "remaining"}}},
R"(def $fn$($xs$, $k$):
    return [$x$ * $k$ for $x$ in $xs$]
)",
R"(@@S@@void $fn$(@@MUT(xs)@@, @@D@@ $k$) {
    @@I@@ $i$ = @@LEN(xs)@@;
    while ($i$-- > 0) $xs$[$i$] *= $k$;
}
)", {}, {}, {}, "[1, 2, 3], 3"},

{"second_largest", "Find the second highest {item} among the {items}.",
 {{"fn", {"second_largest_{item}", "runner_up_{item}"}}, {"xs", {"{items}", "entries"}}, {"best", {"best", "leader"}},
  {"second", {"second", "runner_up"}}, {"x", {"{item}", "contender"}}, {"i", {"i", "place"}}},
R"(def $fn$($xs$):
    $best$, $second$ = float('-inf'), float('-inf')
    for $x$ in $xs$:
        if $x$ > $best$:
            $best$, $second$ = $x$, $best$
        elif $x$ > $second$:
            $second$ = $x$
    return $second$
)",
R"(@@S@@@@D@@ $fn$(@@ARR(xs)@@) {
    @@D@@ $best$ = @@NEGINF@@, $second$ = @@NEGINF@@;
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) {
        if ($xs$[$i$] > $best$) {
            $second$ = $best$;
            $best$ = $xs$[$i$];
        } else if ($xs$[$i$] > $second$) {
            $second$ = $xs$[$i$];
        }
    }
    return $second$;
}
)", {}, {}, {}, "[4, 9, 7, 1]"},

{"spread", "Return the spread between the highest and lowest {item}.",
 {{"fn", {"{item}_spread", "{item}_range_width"}}, {"xs", {"{items}", "observed"}}, {"lo", {"lowest", "bottom"}},
  {"hi", {"highest", "summit"}}, {"i", {"i", "at"}}},
R"(def $fn$($xs$):
    return max($xs$) - min($xs$)
)",
R"(@@S@@@@D@@ $fn$(@@ARR(xs)@@) {
    @@D@@ $lo$ = $xs$[0], $hi$ = $xs$[0];
    for (@@I@@ $i$ = 1; $i$ < @@LEN(xs)@@; $i$++) {
        if ($xs$[$i$] < $lo$) $lo$ = $xs$[$i$];
        if ($xs$[$i$] > $hi$) $hi$ = $xs$[$i$];
    }
    return $hi$ - $lo$;
}
)", {}, {}, {}, "[3, 11, 5]"},

{"merge_sorted", "Merge two sorted lists of {items} into one sorted list.",
 {{"fn", {"merge_{items}", "combine_sorted_{items}"}}, {"xs", {"first_{items}", "left_run"}}, {"ys", {"second_{items}", "right_run"}},
  {"out", {"merged", "combined"}}, {"i", {"i", "li"}}, {"j", {"j", "ri"}}, {"n", {"n", "filled"}}},
R"(def $fn$($xs$, $ys$):
    $out$ = []
    $i$ = $j$ = 0
    while $i$ < len($xs$) and $j$ < len($ys$):
        if $xs$[$i$] <= $ys$[$j$]:
            $out$.append($xs$[$i$])
            $i$ += 1
        else:
            $out$.append($ys$[$j$])
            $j$ += 1
    $out$.extend($xs$[$i$:])
    $out$.extend($ys$[$j$:])
    return $out$
)", {},
R"(static int $fn$(const double *$xs$, int $xs$_len, const double *$ys$, int $ys$_len, double *$out$) {
    int $i$ = 0, $j$ = 0, $n$ = 0;
    while ($i$ < $xs$_len && $j$ < $ys$_len) {
        if ($xs$[$i$] <= $ys$[$j$]) $out$[$n$++] = $xs$[$i$++];
        else $out$[$n$++] = $ys$[$j$++];
    }
    while ($i$ < $xs$_len) $out$[$n$++] = $xs$[$i$++];
    while ($j$ < $ys$_len) $out$[$n$++] = $ys$[$j$++];
    return $n$;
}
)",
R"(inline std::vector<double> $fn$(const std::vector<double>& $xs$, const std::vector<double>& $ys$) {
    std::vector<double> $out$;
    $out$.reserve($xs$.size() + $ys$.size());
    std::merge($xs$.begin(), $xs$.end(), $ys$.begin(), $ys$.end(), std::back_inserter($out$));
    return $out$;
}
)",
R"(public static List<Double> $fn$(List<Double> $xs$, List<Double> $ys$) {
    List<Double> $out$ = new ArrayList<>();
    int $i$ = 0, $j$ = 0;
    while ($i$ < $xs$.size() && $j$ < $ys$.size()) {
        if ($xs$.get($i$) <= $ys$.get($j$)) {
            $out$.add($xs$.get($i$++));
        } else {
            $out$.add($ys$.get($j$++));
        }
    }
    while ($i$ < $xs$.size()) $out$.add($xs$.get($i$++));
    while ($j$ < $ys$.size()) $out$.add($ys$.get($j$++));
    return $out$;
}
)", "[1, 4, 9], [2, 3, 10]"},

{"count_valid", "Count the {items} that pass validation.",
 {{"fn", {"count_valid_{items}", "num_accepted_{items}"}}, {"xs", {"{items}", "submitted"}}, {"h", {"is_valid_{item}", "passes_check"}},
  {"n", {"valid", "accepted"}}, {"x", {"{item}", "each"}}, {"i", {"i", "m"}}},
R"(def $fn$($xs$):
    $n$ = 0
    for $x$ in $xs$:
        if $h$($x$):
            $n$ += 1
    return $n$
)",
R"(@@S@@@@I@@ $fn$(@@ARR(xs)@@) {
    @@I@@ $n$ = 0;
    for (@@I@@ $i$ = @@LEN(xs)@@ - 1; $i$ >= 0; --$i$)
        $n$ += $h$($xs$[$i$]) ? 1 : 0;
    return $n$;
}
)"},

{"apply_discount", "Apply a percentage discount to each {item} and log the adjusted value.",
 {{"fn", {"discount_{items}", "reduce_{items}"}}, {"xs", {"{items}", "amounts"}}, {"k", {"percent", "rate"}},
  {"h", {"log_{item}", "record_change"}}, {"i", {"i", "e"}}},
R"(def $fn$($xs$, $k$):
    for $i$ in range(len($xs$)):
        $xs$[$i$] = $xs$[$i$] * (1 - $k$ / 100.0)
        $h$($xs$[$i$])
    return $xs$
)",
R"(@@S@@void $fn$(@@MUT(xs)@@, @@D@@ $k$) {
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) {
        $xs$[$i$] = $xs$[$i$] * (1.0 - $k$ / 100.0);
        $h$($xs$[$i$]);
    }
}
)"},

{"power", "Raise a base {item} to an integer power by repeated squaring.",
 {{"fn", {"power_{item}", "exponentiate_{item}"}}, {"a", {"base", "radix"}}, {"n", {"exponent", "times"}},
  {"acc", {"result", "product"}}},
R"(def $fn$($a$, $n$):
    $acc$ = 1
    while $n$ > 0:
        if $n$ & 1:
            $acc$ *= $a$
        $a$ *= $a$
        $n$ >>= 1
    return $acc$
)",
R"(@@S@@@@D@@ $fn$(@@D@@ $a$, @@I@@ $n$) {
    @@D@@ $acc$ = 1;
    while ($n$ > 0) {
        if ($n$ & 1) $acc$ *= $a$;
        $a$ *= $a$;
        $n$ >>= 1;
    }
    return $acc$;
}
)", {}, {}, {}, "3, 5"},

{"digit_sum", "Add up the decimal digits of a {item} code.",
 {{"fn", {"{item}_digit_sum", "sum_{item}_digits"}}, {"n", {"code", "remaining_digits"}}, {"acc", {"digits", "checksum"}}},
R"(def $fn$($n$):
    $acc$ = 0
    while $n$ > 0:
        $acc$ += $n$ % 10
        $n$ //= 10
    return $acc$
)",
R"(@@S@@@@I@@ $fn$(long $n$) {
    @@I@@ $acc$ = 0;
    for (; $n$ > 0; $n$ /= 10) {
        $acc$ += (@@I@@)($n$ % 10);
    }
    return $acc$;
}
)", {}, {}, {}, "98765"},

{"all_positive", "Verify that every {item} is strictly positive.",
 {{"fn", {"all_{items}_positive", "{items}_above_zero"}}, {"xs", {"{items}", "checked"}}, {"x", {"{item}", "element"}},
  {"i", {"i", "n"}}},
R"(def $fn$($xs$):
    return all($x$ > 0 for $x$ in $xs$)
)",
R"(@@S@@@@B@@ $fn$(@@ARR(xs)@@) {
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) {
        if (!($xs$[$i$] > 0)) return @@F@@;
    }
    return @@T@@;
}
)", {}, {}, {}, "[1, 2, 0.5]"},

{"count_vowels", "Count the vowels in the {item} label.",
 {{"fn", {"count_{item}_vowels", "{item}_vowel_total"}}, {"s", {"label", "text"}}, {"c", {"ch", "letter"}},
  {"n", {"vowels", "matches"}}},
R"(def $fn$($s$):
    $n$ = 0
    for $c$ in $s$.lower():
        if $c$ in 'aeiou':
            $n$ += 1
    return $n$
)", {},
R"(static int $fn$(const char *$s$) {
    int $n$ = 0;
    for (; *$s$; $s$++) {
        char $c$ = (char)tolower((unsigned char)*$s$);
        if (strchr("aeiou", $c$) != NULL) $n$++;
    }
    return $n$;
}
)",
R"(inline int $fn$(const std::string& $s$) {
    int $n$ = 0;
    for (char $c$ : $s$) {
        if (std::string("aeiou").find(std::tolower(static_cast<unsigned char>($c$))) != std::string::npos) ++$n$;
    }
    return $n$;
}
)",
R"(public static int $fn$(String $s$) {
    int $n$ = 0;
    for (char $c$ : $s$.toLowerCase().toCharArray()) {
        if ("aeiou".indexOf($c$) >= 0) {
            $n$++;
        }
    }
    return $n$;
}
)", "'Education'"},

// Syntax coverage: decorators, f-strings, keyword arguments, generics,
// annotations, raw strings, escapes, preprocessor lines, comments.
{"format_report", "Format the {items} as a separated string with two decimals.",
 {{"fn", {"format_{items}", "render_{items}"}}, {"xs", {"{items}", "figures"}}, {"sep", {"sep", "joiner"}},
  {"parts", {"parts", "pieces"}}, {"x", {"{item}", "{item}"}}, {"i", {"i", "cell"}}},
R"(@staticmethod
def $fn$($xs$, $sep$=', '):
    """Inline string, not a docstring field."""
    $parts$ = [f"{$x$:.2f}" for $x$ in $xs$]  # two decimals
    print(f'{len($parts$)} values', end='')
    return $sep$.join($parts$)
)",
R"(@@S@@void $fn$(@@ARR(xs)@@) {
    /* prints "a, b, c" */
    for (@@I@@ $i$ = 0; $i$ < @@LEN(xs)@@; $i$++) {
        @@PRINT($xs$[$i$])@@;
    }
}
)", {}, {}, {}, {}, true},

{"top_k", "Return the top entries of the {items} sorted in descending order.",
 {{"fn", {"top_{items}", "best_{items}"}}, {"xs", {"{items}", "ranked"}}, {"k", {"limit", "keep"}},
  {"out", {"picked", "ordered"}}, {"total", {"total", "bonus_sum"}}},
R"(def $fn$(self, $xs$, *args, **kwargs):
    '''Multi-line
    string literal'''
    try:
        $total$ = sum(sorted($xs$, key=lambda v: -v)[:3]) \
            + kwargs.get('bonus', 0)
    except (TypeError, ValueError) as err:
        raise RuntimeError(str(err))
    self.last_total = $total$
    return $total$
)", {},
R"(#include <stdlib.h>
#define MAX_{ITEM} 64
static int $fn$(struct node *$xs$, int $k$) {
    int $out$ = 0;
    while ($xs$ != NULL && $out$ < MAX_{ITEM} && $out$ < $k$) {
        $out$++;
        $xs$ = $xs$->next;  // follow the link
    }
    return $out$;
}
)",
R"(template <typename T>
std::string $fn$(const std::vector<T>& $xs$, std::size_t $k$) {
    static const char* header = R"x(name,"value")x";
    std::ostringstream $out$;
    $out$ << header << '\n';
    for (std::size_t i = 0; i < $xs$.size() && i < $k$; ++i) {
        $out$ << $xs$[i] << u8"\u00b0" << "\n";  /* unit */
    }
    return $out$.str();
}
)",
R"(@Override
public <T extends Comparable<T>> List<T> $fn$(List<T> $xs$, final int $k$) {
    List<T> $out$ = new ArrayList<>($xs$);
    Collections.sort($out$, (l, r) -> r.compareTo(l));
    // keep only the first entries
    return $out$.subList(0, Math.min($k$, $out$.size()));
}
)", {}, true},

{"escape_text", "Escape quotes and backslashes in the {item} description.",
 {{"fn", {"escape_{item}_text", "quote_{item}"}}, {"s", {"description", "raw_text"}}, {"out", {"escaped", "buffer"}},
  {"i", {"i", "offset"}}},
R"(def $fn$($s$):
    $out$ = $s$.replace('\\', r'\\').replace("\"", '\\"')
    return b'' if not $out$ else $out$
)", {},
R"(static void $fn$(const char *$s$, char *$out$) {
    int $i$ = 0;
    for (; *$s$ != '\0'; ++$s$) {
        if (*$s$ == '"' || *$s$ == '\\') $out$[$i$++] = '\\';
        $out$[$i$++] = *$s$;
    }
    $out$[$i$] = '\0';
}
)",
R"(inline std::string $fn$(std::string_view $s$) {
    std::string $out$;
    for (char ch : $s$) {
        if (ch == '"' || ch == '\\') $out$ += '\\';
        $out$ += ch;
    }
    return $out$;  // caller owns the copy
}
)",
R"(public static String $fn$(char[] $s$) {
    StringBuilder $out$ = new StringBuilder();
    outer:
    for (int $i$ = 0; $i$ < $s$.length; $i$++) {
        switch ($s$[$i$]) {
            case '\\': $out$.append("\\\\"); break;
            case '"': $out$.append("\\\""); break;
            case ';': break outer;
            default: $out$.append($s$[$i$] == '\t' ? ' ' : $s$[$i$]);
        }
    }
    return $out$.toString();
}
)", {}, true},
    };
    return list;
}
// clang-format on

namespace detail {

inline std::string replace_all(std::string s, std::string_view from, std::string_view to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

inline std::string apply_noun(std::string s, const Noun& noun) {
    std::string upper(noun.singular);
    for (auto& c : upper) c = static_cast<char>(c - 32 * (c >= 'a' && c <= 'z'));
    s = replace_all(std::move(s), "{items}", noun.plural);
    s = replace_all(std::move(s), "{item}", noun.singular);
    return replace_all(std::move(s), "{ITEM}", upper);
}

inline std::string to_camel(std::string_view snake) {
    std::string out;
    bool up = false;
    for (char c : snake) {
        if (c == '_' && !out.empty()) {
            up = true;
            continue;
        }
        out += up && c >= 'a' && c <= 'z' ? static_cast<char>(c - 32) : c;
        up = false;
    }
    return out;
}

/// Expands @@MACRO@@ / @@MACRO(arg)@@ into language-specific C-family text.
inline std::string expand_cfam(std::string_view body, Language lang) {
    std::string out;
    std::size_t pos = 0;
    while (true) {
        const auto open = body.find("@@", pos);
        if (open == std::string_view::npos) break;
        const auto close = body.find("@@", open + 2);
        if (close == std::string_view::npos) throw std::logic_error("unclosed template macro");
        out.append(body.substr(pos, open - pos));
        const std::string_view macro = body.substr(open + 2, close - open - 2);
        std::string_view name = macro, arg;
        if (auto paren = macro.find('('); paren != std::string_view::npos) {
            name = macro.substr(0, paren);
            arg = macro.substr(paren + 1, macro.size() - paren - 2);
        }
        const std::string a = "$" + std::string(arg) + "$";
        const bool java = lang == Language::java, c = lang == Language::c;
        if (name == "S") out += java ? "public static " : c ? "static " : "inline ";
        else if (name == "D") out += "double";
        else if (name == "I") out += "int";
        else if (name == "B") out += java ? "boolean" : c ? "int" : "bool";
        else if (name == "T") out += c ? "1" : "true";
        else if (name == "F") out += c ? "0" : "false";
        else if (name == "NEGINF")
            out += java ? "Double.NEGATIVE_INFINITY" : c ? "-HUGE_VAL" : "-std::numeric_limits<double>::infinity()";
        else if (name == "ARR")
            out += java ? "double[] " + a : c ? "const double *" + a + ", int " + a + "_len"
                                              : "const std::vector<double>& " + a;
        else if (name == "MUT")
            out += java ? "double[] " + a : c ? "double *" + a + ", int " + a + "_len" : "std::vector<double>& " + a;
        else if (name == "LEN")
            out += java ? a + ".length" : c ? a + "_len" : (lang == Language::cpp ? "static_cast<int>(" + a + ".size())" : "");
        else if (name == "LENARG")
            out += c ? ", " + a + "_len" : "";
        else if (name == "PRINT")
            out += java ? "System.out.println(" + std::string(arg) + ")"
                        : c ? "printf(\"%f\\n\", " + std::string(arg) + ")" : "std::cout << " + std::string(arg) + " << '\\n'";
        else throw std::logic_error("unknown template macro " + std::string(name));
        pos = close + 2;
    }
    out.append(body.substr(pos));
    return out;
}

}  // namespace detail

/// Identifier chosen for `placeholder` under `style`, in the language's casing.
inline std::string name_for(const TaskTemplate& task, std::string_view placeholder, Language lang, const Noun& noun,
                            int style) {
    for (const auto& [key, styles] : task.names) {
        if (key != placeholder) continue;
        std::string n = detail::apply_noun(std::string(style == 0 ? styles.first : styles.second), noun);
        return lang == Language::java ? detail::to_camel(n) : n;
    }
    throw std::logic_error("task " + std::string(task.id) + " has no name for $" + std::string(placeholder) + "$");
}

/// Source text of `task` in `lang` with the given noun and naming style.
inline std::string render(const TaskTemplate& task, Language lang, const Noun& noun, int style) {
    std::string body;
    switch (lang) {
        case Language::python: body = std::string(task.python); break;
        case Language::c: body = task.c.empty() ? detail::expand_cfam(task.cfam, lang) : std::string(task.c); break;
        case Language::cpp: body = task.cpp.empty() ? detail::expand_cfam(task.cfam, lang) : std::string(task.cpp); break;
        case Language::java: body = task.java.empty() ? detail::expand_cfam(task.cfam, lang) : std::string(task.java); break;
    }
    if (body.empty()) throw std::logic_error("task " + std::string(task.id) + " has no body");
    std::string out;
    std::size_t pos = 0;
    while (true) {
        const auto open = body.find('$', pos);
        if (open == std::string::npos) break;
        const auto close = body.find('$', open + 1);
        if (close == std::string::npos) throw std::logic_error("unclosed placeholder in " + std::string(task.id));
        out.append(body, pos, open - pos);
        out += name_for(task, std::string_view(body).substr(open + 1, close - open - 1), lang, noun, style);
        pos = close + 1;
    }
    out.append(body, pos);
    return detail::apply_noun(std::move(out), noun);
}

inline std::string docstring_for(const TaskTemplate& task, const Noun& noun) {
    return detail::apply_noun(std::string(task.doc), noun);
}

inline DatasetRecord make_record(std::string id, const TaskTemplate& task, Language lang, const Noun& noun, int style) {
    DatasetRecord r;
    r.id = std::move(id);
    r.language = std::string(to_string(lang));
    r.code = render(task, lang, noun, style);
    r.docstring = docstring_for(task, noun);
    return r;
}

/// `n` records cycling through every task, language, noun and style in a
/// seeded order. Ids are unique; contents repeat once n exceeds the number
/// of combinations.
inline std::vector<DatasetRecord> mixed_corpus(std::size_t n, std::uint64_t seed) {
    struct Combo {
        std::size_t task, noun;
        Language lang;
        int style;
    };
    std::vector<Combo> combos;
    for (std::size_t t = 0; t < tasks().size(); ++t)
        for (std::size_t v = 0; v < nouns().size(); ++v)
            for (auto lang : kAllLanguages)
                for (int style : {0, 1}) combos.push_back({t, v, lang, style});
    SeededGenerator gen(seed, "mixed-corpus");
    gen.shuffle(combos);
    std::vector<DatasetRecord> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = combos[i % combos.size()];
        out.push_back(make_record("mixed-" + std::to_string(i), tasks()[c.task], c.lang, nouns()[c.noun], c.style));
    }
    return out;
}

/// `n` records with pairwise distinct (task, noun) combinations, languages
/// rotating, so every docstring is unique. At most tasks x nouns records.
inline std::vector<DatasetRecord> search_corpus(std::size_t n, std::uint64_t seed) {
    std::vector<std::pair<std::size_t, std::size_t>> combos;
    for (std::size_t t = 0; t < tasks().size(); ++t)
        for (std::size_t v = 0; v < nouns().size(); ++v) combos.emplace_back(t, v);
    if (n > combos.size()) throw std::invalid_argument("search corpus larger than the template space");
    SeededGenerator gen(seed, "search-corpus");
    gen.shuffle(combos);
    std::vector<DatasetRecord> out;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [t, v] = combos[i];
        const Language lang = kAllLanguages[i % kAllLanguages.size()];
        out.push_back(make_record("search-" + std::to_string(i), tasks()[t], lang, nouns()[v],
                                  static_cast<int>(gen.below(2))));
    }
    return out;
}

/// Clone-detection corpus: the golden before/after pair as one group, then
/// up to `groups` three-member groups, one per (task, language family) for
/// non-syntax-extra tasks. Each group holds a unit, its rename clone
/// (style 1) and a copy of the unit that alters only layout and comments.
/// The C-family language rotates per task so that no two groups share a
/// template.
inline std::vector<DatasetRecord> clone_corpus(std::size_t groups, std::uint64_t seed) {
    std::vector<DatasetRecord> out;
    DatasetRecord a, b;
    a.id = "golden-named";
    b.id = "golden-anonymized";
    a.language = b.language = "cpp";
    a.code = std::string(golden_named());
    b.code = std::string(golden_expected());
    a.clone_group = b.clone_group = "golden";
    out.push_back(a);
    out.push_back(b);

    static constexpr Language cfam[] = {Language::c, Language::cpp, Language::java};
    std::vector<std::pair<std::size_t, Language>> combos;
    std::size_t regular = 0;
    for (std::size_t t = 0; t < tasks().size(); ++t) {
        if (tasks()[t].syntax_extra) continue;
        combos.emplace_back(t, Language::python);
        combos.emplace_back(t, cfam[regular++ % std::size(cfam)]);
    }
    if (groups > combos.size()) throw std::invalid_argument("clone corpus larger than the template space");
    SeededGenerator gen(seed, "clone-corpus");
    gen.shuffle(combos);
    for (std::size_t g = 0; g < groups; ++g) {
        const auto [t, lang] = combos[g];
        const auto& task = tasks()[t];
        const Noun& noun = nouns()[gen.below(nouns().size())];
        const std::string group = "g" + std::to_string(g);
        DatasetRecord first = make_record(group + "-a", task, lang, noun, 0);
        DatasetRecord renamed = make_record(group + "-b", task, lang, noun, 1);
        DatasetRecord layout = first;
        layout.id = group + "-c";
        const std::string comment = lang == Language::python ? "# reformatted copy\n" : "// reformatted copy\n";
        layout.code = comment + detail::replace_all(layout.code, "\n", "\n\n");
        first.clone_group = renamed.clone_group = layout.clone_group = group;
        out.push_back(std::move(first));
        out.push_back(std::move(renamed));
        out.push_back(std::move(layout));
    }
    return out;
}

/// Docstrings of random dictionary words over code made of random
/// identifiers; no term is shared between the two sides.
inline std::vector<DatasetRecord> random_token_corpus(std::size_t n, std::uint64_t seed) {
    static constexpr std::string_view words[] = {
        "apple", "river", "stone", "cloud", "maple", "tiger", "ocean", "piano", "lemon", "forest",
        "candle", "silver", "garden", "window", "harbor", "meadow", "pepper", "rocket", "violet", "thunder"};
    SeededGenerator gen(seed, "random-token-corpus");
    ReservedNames reserved(&load_profile(Language::python));
    std::vector<DatasetRecord> out;
    for (std::size_t i = 0; i < n; ++i) {
        DatasetRecord r;
        r.id = "noise-" + std::to_string(i);
        r.language = "python";
        std::string doc;
        for (int w = 0; w < 6; ++w) doc += std::string(w ? " " : "") + std::string(words[gen.below(std::size(words))]);
        r.docstring = doc;
        // Digit-only separators keep every identifier a single search term
        // that cannot match a dictionary word.
        std::string code = "def f" + std::to_string(i) + "():\n    return [";
        for (int k = 0; k < 8; ++k) {
            std::string id = "q";
            for (int c = 0; c < 6; ++c) id += static_cast<char>('a' + gen.below(26));
            code += (k ? ", " : "") + id + std::to_string(k);
        }
        r.code = code + "]\n";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace anon::sample

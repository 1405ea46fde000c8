#pragma once

#include <random>
#include <string>
#include <vector>

#include "lei2json/flattener.hpp"
#include "lei2json/ojson.hpp"

namespace testsupport {

// Random event schema within the supported keyword subset: depth <= 3, at
// most 25 leaves, globally unique property names and headers, mixed leaf
// kinds with occasional formats and enums. Every object node starts with a
// required leaf child so a required object can always materialize from its
// own cells. Deterministic for a given engine state.
lei2json::ojson random_schema(std::mt19937_64& rng);

// One CSV row of valid cells for `cols`: required cells always filled,
// optional top-level subtrees filled or left empty as a unit at random
// (always filled when fill_all). Rows convert to schema-valid events.
std::vector<std::string> random_row(const std::vector<lei2json::ColumnSpec>& cols,
                                    std::mt19937_64& rng, bool fill_all);

// Applies one random structural corruption to a copy of `events`, possibly
// inside a nested object: dropping a key, retyping a value, injecting an
// unknown key, or replacing a whole event with a non-object. The result may
// or may not still be valid.
lei2json::ojson mutate_events(const lei2json::ojson& events, std::mt19937_64& rng);

}  // namespace testsupport

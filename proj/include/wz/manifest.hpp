#pragma once

#include <map>
#include <string>

#include "wz/ff.hpp"
#include "wz/geom.hpp"

namespace wz {

/// Parsed manifest: a field block, named variety blocks (affine,
/// projective, product, union, translate), optional action blocks, and a
/// free-form [declare] section consumed by the checkers.
struct Manifest {
    FqField field;
    std::map<std::string, VarietySpec> varieties;
    std::map<std::string, GroupAction> actions;
    std::map<std::string, std::string> declares;
    std::string default_variety;

    const VarietySpec& variety(const std::string& name) const;
    const GroupAction& action(const std::string& name) const;
};

/// Parse the manifest DSL. Blocks are `[section name]` headers over
/// `key = value` lines; polynomial expressions use + - * ^ over integer
/// literals, declared variables and the reserved generator symbol g.
/// Errors carry line/column positions.
Manifest parse_manifest(const std::string& text);

/// Expression parser exposed for tests and the manifest generator:
/// parse `text` into a polynomial over `vars` (g appended when the field
/// has a > 1).
IntMPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                    const FqField& field, int line_no = 1);

}  // namespace wz

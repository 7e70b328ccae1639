#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosep/coextension.hpp"
#include "cosep/coring.hpp"

namespace cosep {

struct NamedBicomodule {
    Bicomodule bicomodule;
    std::vector<std::string> labels;
};

struct CoringDefinition {
    AlgebraPtr algebra;
    bool explicit_algebra = false;
    Coring coring;
    std::vector<std::string> labels;
    std::vector<NamedBicomodule> bicomodules;
};

struct CoextensionDefinition {
    Coextension ext;
    std::vector<std::string> a_labels, c_labels;
    std::vector<NamedBicomodule> bicomodules;
};

/// A parsed definition file: a coring with bicomodules, or a coextension.
struct Definition {
    Field field;
    std::optional<CoringDefinition> coring;
    std::optional<CoextensionDefinition> coext;
};

/// Parses the JSON definition format. Throws ParseError on malformed input;
/// structural problems (shapes, unknown labels) are ParseError as well.
Definition parse_definition(std::string_view text);
Definition load_definition(const std::string& path);
/// Canonical JSON text (sorted keys, two-space indent).
std::string serialize_definition(const Definition& d);

/// Looks up a bicomodule by name; also understands "regular", "zero" and
/// "induced:<name>". Throws ParseError for unknown names.
Bicomodule find_bicomodule(const CoringDefinition& d, const std::string& name);
/// Same for coextension files ("regular" is A over itself).
Bicomodule find_bicomodule(const CoextensionDefinition& d, const std::string& name);

}  // namespace cosep

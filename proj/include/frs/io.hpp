#pragma once

#include <string>
#include <string_view>

#include "frs/pipeline.hpp"

namespace frs {

/// Parses the line-oriented presentation format:
///
///     # comment
///     alphabet: a b s
///     rule: a b -> s      # trailing text is kept as the rule's provenance
///     complement: a ; a b
///
/// Comments of the form "# construction: <name>" and "# phi: <letter> = <word>"
/// carry construction metadata. Throws InputError with line and column.
Presentation parse_presentation(std::string_view text);

/// Canonical text: alphabet sorted by name, rules in stored order with their
/// provenance as trailing comments, one declaration per line.
std::string serialize_presentation(const Presentation& p);

/// Equality up to letter ids: same letter names, rules, tags, complement and metadata.
bool equivalent(const Presentation& x, const Presentation& y);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace frs

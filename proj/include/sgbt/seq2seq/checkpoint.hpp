#pragma once

#include <iosfwd>
#include <string>

#include "sgbt/seq2seq/model.hpp"

namespace sgbt::seq2seq {

inline constexpr int kCheckpointVersion = 1;

/// Versioned line format with sorted keys; doubles use the shortest
/// round-trip spelling, so load(save(theta)) == theta bit for bit.
void save(std::ostream& out, const ModelParams& theta);
ModelParams load(std::istream& in);

void save_file(const std::string& path, const ModelParams& theta);
ModelParams load_file(const std::string& path);

}  // namespace sgbt::seq2seq

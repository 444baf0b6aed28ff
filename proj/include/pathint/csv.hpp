#pragma once

#include <string>

#include "pathint/partition.hpp"
#include "pathint/path.hpp"
#include "pathint/running_integral.hpp"

namespace pathint {

/// Path CSV: header "t,x1,...,xd", one row per grid point, 17 significant
/// digits (lossless double round-trip). I/O failures throw std::runtime_error.
void write_path_csv(const SamplePath& path, const std::string& file);
SamplePath read_path_csv(const std::string& file);

/// Partition CSV: header "level,k,t", sorted by (level, k).
void write_partition_csv(const PartitionSequence& seq, const std::string& file);

/// Running-integral CSV: header "t,c11,...,cij", entries row-major.
void write_running_csv(const RunningIntegral& ri, const std::string& file);

}  // namespace pathint

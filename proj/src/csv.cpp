#include "pathint/csv.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pathint/errors.hpp"
#include <vector>

namespace pathint {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_path_csv(const SamplePath& path, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw IoError("write_path_csv: cannot open " + file);
    out << "t";
    for (int c = 1; c <= path.dim(); ++c) out << ",x" << c;
    out << "\n";
    for (std::size_t i = 0; i < path.length(); ++i) {
        out << fmt17(path.grid().time(i));
        auto v = path.value(i);
        for (int c = 0; c < path.dim(); ++c) out << "," << fmt17(v[c]);
        out << "\n";
    }
    if (!out) throw IoError("write_path_csv: write failed on " + file);
}

SamplePath read_path_csv(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw IoError("read_path_csv: cannot open " + file);
    std::string line;
    if (!std::getline(in, line)) throw IoError("read_path_csv: empty file " + file);
    int dim = 0;
    for (char ch : line)
        if (ch == ',') ++dim;
    if (dim < 1) throw IoError("read_path_csv: bad header in " + file);

    std::vector<double> times;
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        int col = 0;
        while (std::getline(ss, cell, ',')) {
            const double v = std::strtod(cell.c_str(), nullptr);
            if (col == 0)
                times.push_back(v);
            else
                values.push_back(v);
            ++col;
        }
        if (col != dim + 1) throw IoError("read_path_csv: ragged row in " + file);
    }
    return SamplePath(share(TimeGrid(std::move(times))), dim, std::move(values));
}

void write_partition_csv(const PartitionSequence& seq, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw IoError("write_partition_csv: cannot open " + file);
    out << "level,k,t\n";
    for (std::size_t l = 0; l < seq.size(); ++l) {
        const Partition& part = seq.levels[l];
        for (std::size_t k = 0; k < part.points(); ++k)
            out << seq.level_ids[l] << "," << k << "," << fmt17(part.time(k)) << "\n";
    }
    if (!out) throw IoError("write_partition_csv: write failed on " + file);
}

void write_running_csv(const RunningIntegral& ri, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw IoError("write_running_csv: cannot open " + file);
    out << "t";
    for (int i = 1; i <= ri.rows(); ++i)
        for (int j = 1; j <= ri.cols(); ++j) out << ",c" << i << j;
    out << "\n";
    for (std::size_t k = 0; k < ri.length(); ++k) {
        out << fmt17(ri.grid().time(k));
        auto v = ri.at(k);
        for (double e : v) out << "," << fmt17(e);
        out << "\n";
    }
    if (!out) throw IoError("write_running_csv: write failed on " + file);
}

}  // namespace pathint

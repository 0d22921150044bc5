#pragma once

#include "thl/sequences.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace thl {

struct DimTable {
    std::string theory;
    std::vector<std::size_t> dims; // degrees 0..valid_through

    friend bool operator==(const DimTable&, const DimTable&) = default;
};

struct CheckEntry {
    std::string check;
    std::string location;
    std::string verdict; // "pass", "fail" or "skipped"
    std::string detail;

    friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct SequenceNode {
    std::string sequence;
    ExactnessNode node;
};

struct Report {
    std::string job;
    std::string command;
    std::size_t max_degree = 0;
    std::vector<DimTable> tables;
    std::vector<CheckEntry> checks;
    std::vector<SequenceNode> nodes;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, double>> timings; // seconds; human format only

    void add_table(std::string theory, std::vector<std::size_t> dims);
    void add_check(std::string check, std::string location, bool pass, std::string detail = "");
    void skip(std::string check, std::string location, std::string reason);
    void add_sequence(const std::string& name, const ExactnessReport& r);
    // No failed check and no inexact node or nonzero composite.
    bool passed() const;
};

std::string emit_human(const Report& r);
// One JSON object per line, keys sorted, no timings.
std::string emit_machine(const Report& r);
// Inverse of emit_machine for header, tables, checks and notes; sequence nodes are restored as well.
Report parse_machine(const std::string& text);

} // namespace thl

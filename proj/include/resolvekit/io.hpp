#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "resolvekit/construct.hpp"
#include "resolvekit/groups.hpp"

namespace resolvekit {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixture directory: RESOLVEKIT_DATA if set, otherwise ./data.
std::filesystem::path data_dir();

// Certificate text format: line 1 "m k l"; then l lines of k strictly
// increasing integers (1-indexed points). '#' starts a comment line.
Certificate read_certificate(std::istream& in);
Certificate read_certificate_file(const std::filesystem::path& path);
void write_certificate(std::ostream& out, const Certificate& cert);
void write_certificate_file(const std::filesystem::path& path, const Certificate& cert);

// Group text format: line 1 "n g"; then g lines of n integers, where
// position i holds the image of point i.
PermGroup read_group(std::istream& in);
PermGroup read_group_file(const std::filesystem::path& path);
void write_group(std::ostream& out, const PermGroup& g);
void write_group_file(const std::filesystem::path& path, const PermGroup& g);

// Graph text format: line 1 "n e"; then e lines "u v" (1-indexed).
SimpleGraph read_graph(std::istream& in);
SimpleGraph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const SimpleGraph& g);
void write_graph_file(const std::filesystem::path& path, const SimpleGraph& g);

}  // namespace resolvekit

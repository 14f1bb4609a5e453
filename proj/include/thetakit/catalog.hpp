#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/srg.hpp"

namespace thetakit {

struct GeneratorInfo {
    std::string name;
    std::string usage;
    std::string description;
};

const std::vector<GeneratorInfo>& generator_catalog();

// Builds a graph from "name[:arg[:arg...]]", e.g. "kneser:5:2" or "paley:13".
// Throws std::invalid_argument for unknown names or bad arguments.
Graph from_generator_spec(std::string_view spec);

struct FixtureEntry {
    std::string name;
    std::filesystem::path file;
    int n = 0;
    long long edges = 0;
    std::optional<SrgParams> srg;
    std::optional<double> theta;
    std::optional<double> theta_complement;
    std::optional<long long> alpha, omega, chi;
    GraphMeta meta;
};

// THETAKIT_FIXTURES overrides the directory baked in at build time.
std::filesystem::path fixture_dir();
std::vector<FixtureEntry> load_manifest(const std::filesystem::path& dir = fixture_dir());
std::optional<FixtureEntry> find_fixture(std::string_view name, const std::filesystem::path& dir = fixture_dir());
// Reads the graph6 file and attaches the manifest flags.
Graph load_fixture(std::string_view name, const std::filesystem::path& dir = fixture_dir());

}  // namespace thetakit

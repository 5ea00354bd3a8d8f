#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace apichain {

struct Scholar {
    std::string person_id;
    std::string name;
    std::string organization;
    std::vector<std::string> interest;
    std::string bio;
    std::string education_experience;
    std::vector<std::string> pub_ids;
};

struct Publication {
    std::string pub_id;
    std::string title;
    int year = 0;
    std::int64_t num_citation = 0;
    std::vector<std::string> author_ids;  // byline order, first author first
};

/// A frozen synthetic snapshot of scholars and publications. Regenerating
/// with the same seed yields an identical corpus, and identical requests
/// against it return identical bytes.
struct Corpus {
    std::map<std::string, Scholar> scholars;
    std::map<std::string, Publication> publications;
    std::string snapshot_id;
    std::uint64_t seed = 0;
};

/// Seed-deterministic corpus synthesis from fixed word lists. Every scholar
/// authors at least one publication (requires n_pubs >= n_scholars) and the
/// coauthorship graph is dense enough that most have several.
Corpus generate_corpus(std::uint64_t seed, int n_scholars, int n_pubs);

nlohmann::json corpus_to_json(const Corpus& corpus);
Corpus corpus_from_json(const nlohmann::json& doc);

void save_corpus(const Corpus& corpus, const std::string& path);
Corpus load_corpus(const std::string& path);

}  // namespace apichain

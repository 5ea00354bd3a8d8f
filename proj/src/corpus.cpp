#include "apichain/corpus.hpp"

#include "apichain/util.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

using json = nlohmann::json;

namespace apichain {

namespace {

const char* kFirstNames[] = {
    "Alice", "Bruno", "Carla", "Daniel", "Elena", "Felix", "Grace", "Hiro",
    "Ingrid", "Jonas", "Katya", "Liam", "Mei", "Nadia", "Omar", "Priya",
    "Quentin", "Rosa", "Stefan", "Tara", "Umar", "Vera", "Wen", "Ximena",
    "Yusuf", "Zoe", "Anders", "Bianca", "Cormac", "Daria", "Emil", "Farah",
    "Gustav", "Hana", "Ivo", "Jael", "Kenji", "Lena", "Marco", "Noor",
};

const char* kLastNames[] = {
    "Abramov", "Baker", "Chen", "Dubois", "Eriksen", "Fontaine", "Garcia", "Hansen",
    "Ivanova", "Jensen", "Kim", "Larsen", "Moreau", "Nakamura", "Okafor", "Petrov",
    "Quispe", "Rossi", "Sato", "Tanaka", "Ueda", "Varga", "Wagner", "Xu",
    "Yamamoto", "Zhang", "Almeida", "Bergstrom", "Costa", "Dimitrov", "Engel", "Farkas",
    "Gruber", "Horvath", "Iversen", "Jonsson", "Kowalski", "Lindqvist", "Meyer", "Novak",
};

const char* kOrganizations[] = {
    "Aalto University", "Basel Institute of Technology", "Cedar Grove University",
    "Delta Polytechnic", "East River University", "Fairbank College",
    "Granite State University", "Harborview Institute", "Ironwood University",
    "Juniper Technical University", "Kestrel Research Institute", "Lakeshore University",
    "Meridian University", "Northgate Institute", "Oakmont University",
    "Pinecrest Polytechnic", "Quarry Hill University", "Redwood Institute",
    "Silverlake University", "Tidewater College", "Umbra Research Center",
    "Valley Forge University", "Westbrook Institute", "Yellowfield University",
    "Zenith Polytechnic", "Arcadia University", "Blackstone Institute",
    "Crescent Bay University", "Dunmore College", "Evergreen Technical University",
    "Foxglove Institute", "Glenhaven University", "Hollybrook College",
    "Ivyridge University", "Jadeport Institute", "Kingsmead University",
    "Larkspur Polytechnic", "Mapleton University", "Nightingale Institute",
    "Osprey Point University", "Pembroke Research Institute", "Quillford University",
    "Ravenswood Institute", "Sagebrush University", "Thornfield College",
    "Umberhill University", "Vantage Institute", "Wrenfield University",
};

const char* kInterests[] = {
    "graph mining", "information retrieval", "knowledge graphs", "question answering",
    "program synthesis", "distributed systems", "database theory", "natural language processing",
    "computer vision", "reinforcement learning", "recommender systems", "network science",
    "computational biology", "quantum computing", "compiler design", "formal verification",
    "robotics", "speech recognition", "data visualization", "privacy engineering",
    "cryptography", "operating systems", "human computer interaction", "semantic parsing",
    "causal inference", "optimization", "time series analysis", "federated learning",
    "scholarly data mining", "entity resolution", "topic modeling", "crowdsourcing",
    "stream processing", "hardware acceleration", "software testing", "social computing",
    "spatial databases", "text summarization", "anomaly detection", "typed languages",
    "numerical methods", "model compression", "information extraction", "bioinformatics",
    "edge computing", "digital libraries", "citation analysis", "peer review systems",
};

const char* kTitleWords[] = {
    "Adaptive", "Bayesian", "Coupled", "Distributed", "Efficient", "Federated",
    "Graph", "Hierarchical", "Incremental", "Joint", "Kernel", "Latent",
    "Modular", "Neural", "Online", "Parallel", "Quantized", "Robust",
    "Scalable", "Temporal", "Unified", "Variational", "Weighted", "Sparse",
    "Indexing", "Learning", "Mining", "Ranking", "Matching", "Clustering",
    "Retrieval", "Inference", "Alignment", "Sampling", "Embedding", "Reasoning",
    "Networks", "Databases", "Corpora", "Streams", "Archives", "Benchmarks",
    "Queries", "Citations", "Entities", "Documents", "Sequences", "Structures",
};

const char* kDegrees[] = {"PhD", "MSc", "BSc"};

template <size_t N>
const char* pick(Rng& rng, const char* (&arr)[N]) {
    return arr[rng.below(N)];
}

std::string scholar_id(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "P%06d", index);
    return buf;
}

std::string pub_id_for(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "W%06d", index);
    return buf;
}

std::int64_t heavy_tail_citations(Rng& rng) {
    std::int64_t c = static_cast<std::int64_t>(rng.below(40));
    while (rng.below(2) == 0 && c < 50000) {
        c = c * 2 + static_cast<std::int64_t>(rng.below(7));
    }
    return c;
}

}  // namespace

Corpus generate_corpus(std::uint64_t seed, int n_scholars, int n_pubs) {
    if (n_scholars < 1) throw std::invalid_argument("n_scholars must be at least 1");
    if (n_pubs < n_scholars) throw std::invalid_argument("n_pubs must be at least n_scholars");

    Rng rng(seed);
    Corpus corpus;
    corpus.seed = seed;
    {
        std::ostringstream id;
        id << "corpus-" << seed << "-" << n_scholars << "-" << n_pubs;
        corpus.snapshot_id = id.str();
    }

    for (int i = 0; i < n_scholars; ++i) {
        Scholar s;
        s.person_id = scholar_id(i);
        s.name = std::string(pick(rng, kFirstNames)) + " " + pick(rng, kLastNames);
        s.organization = pick(rng, kOrganizations);
        const int n_interests = 1 + static_cast<int>(rng.below(3));
        std::set<std::string> chosen;
        while (static_cast<int>(chosen.size()) < n_interests) chosen.insert(pick(rng, kInterests));
        s.interest.assign(chosen.begin(), chosen.end());
        s.education_experience =
            std::string(pick(rng, kDegrees)) + ", " + pick(rng, kOrganizations);
        s.bio = s.name + " works on " + s.interest.front() + " at " + s.organization + ".";
        corpus.scholars.emplace(s.person_id, std::move(s));
    }

    for (int j = 0; j < n_pubs; ++j) {
        Publication p;
        p.pub_id = pub_id_for(j);
        const int n_words = 3 + static_cast<int>(rng.below(3));
        std::ostringstream title;
        for (int w = 0; w < n_words; ++w) {
            if (w) title << " ";
            title << pick(rng, kTitleWords);
        }
        title << " " << (100 + j);  // keeps substring search unambiguous
        p.title = title.str();
        p.year = static_cast<int>(rng.range(1985, 2023));
        p.num_citation = heavy_tail_citations(rng);

        // First n_scholars publications are anchored one per scholar so that
        // everyone authors something; remaining slots are random.
        const int n_authors = 1 + static_cast<int>(rng.below(4));
        std::vector<int> author_idx;
        author_idx.push_back(j < n_scholars ? j : static_cast<int>(rng.below(n_scholars)));
        while (static_cast<int>(author_idx.size()) < n_authors) {
            int cand = static_cast<int>(rng.below(n_scholars));
            if (std::find(author_idx.begin(), author_idx.end(), cand) == author_idx.end())
                author_idx.push_back(cand);
        }
        for (int idx : author_idx) {
            p.author_ids.push_back(scholar_id(idx));
            corpus.scholars.at(scholar_id(idx)).pub_ids.push_back(p.pub_id);
        }
        corpus.publications.emplace(p.pub_id, std::move(p));
    }

    for (auto& [id, scholar] : corpus.scholars) {
        std::sort(scholar.pub_ids.begin(), scholar.pub_ids.end());
    }

    // Best effort at a unique most-cited publication per scholar: break exact
    // top ties by bumping the earliest publication.
    for (auto& [id, scholar] : corpus.scholars) {
        if (scholar.pub_ids.size() < 2) continue;
        std::int64_t top = -1;
        std::string top_pub;
        int ties = 0;
        for (const auto& pid : scholar.pub_ids) {
            const auto cites = corpus.publications.at(pid).num_citation;
            if (cites > top) {
                top = cites;
                top_pub = pid;
                ties = 1;
            } else if (cites == top) {
                ++ties;
            }
        }
        if (ties > 1) corpus.publications.at(top_pub).num_citation += 1;
    }

    return corpus;
}

json corpus_to_json(const Corpus& corpus) {
    json doc;
    doc["snapshot_id"] = corpus.snapshot_id;
    doc["seed"] = corpus.seed;
    json scholars = json::array();
    for (const auto& [id, s] : corpus.scholars) {
        scholars.push_back({{"person_id", s.person_id},
                            {"name", s.name},
                            {"organization", s.organization},
                            {"interest", s.interest},
                            {"bio", s.bio},
                            {"education_experience", s.education_experience},
                            {"pub_ids", s.pub_ids}});
    }
    json pubs = json::array();
    for (const auto& [id, p] : corpus.publications) {
        pubs.push_back({{"pub_id", p.pub_id},
                        {"title", p.title},
                        {"year", p.year},
                        {"num_citation", p.num_citation},
                        {"author_ids", p.author_ids}});
    }
    doc["scholars"] = scholars;
    doc["publications"] = pubs;
    return doc;
}

Corpus corpus_from_json(const json& doc) {
    Corpus corpus;
    corpus.snapshot_id = doc.value("snapshot_id", "");
    corpus.seed = doc.value("seed", 0ULL);
    for (const auto& node : doc.at("scholars")) {
        Scholar s;
        s.person_id = node.at("person_id").get<std::string>();
        s.name = node.at("name").get<std::string>();
        s.organization = node.at("organization").get<std::string>();
        s.interest = node.at("interest").get<std::vector<std::string>>();
        s.bio = node.value("bio", "");
        s.education_experience = node.value("education_experience", "");
        s.pub_ids = node.at("pub_ids").get<std::vector<std::string>>();
        corpus.scholars.emplace(s.person_id, std::move(s));
    }
    for (const auto& node : doc.at("publications")) {
        Publication p;
        p.pub_id = node.at("pub_id").get<std::string>();
        p.title = node.at("title").get<std::string>();
        p.year = node.at("year").get<int>();
        p.num_citation = node.at("num_citation").get<std::int64_t>();
        p.author_ids = node.at("author_ids").get<std::vector<std::string>>();
        corpus.publications.emplace(p.pub_id, std::move(p));
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write corpus snapshot '" + path + "'");
    out << corpus_to_json(corpus).dump(2) << "\n";
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus snapshot '" + path + "'");
    json doc;
    in >> doc;
    return corpus_from_json(doc);
}

}  // namespace apichain

#include "apichain/service.hpp"

#include "apichain/util.hpp"

#include "httplib.h"

#include <algorithm>
#include <set>

using json = nlohmann::json;

namespace apichain {

namespace {

std::string string_param(const std::map<std::string, json>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) return "";
    if (it->second.is_string()) return it->second.get<std::string>();
    if (it->second.is_number_integer()) return std::to_string(it->second.get<std::int64_t>());
    throw ApiError(ApiErrorCode::BadRequest, "parameter '" + name + "' must be a string");
}

const Scholar& scholar_or_404(const Corpus& corpus, const std::string& person_id) {
    auto it = corpus.scholars.find(person_id);
    if (it == corpus.scholars.end())
        throw ApiError(ApiErrorCode::NotFound, "no scholar with person_id '" + person_id + "'");
    return it->second;
}

const Publication& pub_or_404(const Corpus& corpus, const std::string& pub_id) {
    auto it = corpus.publications.find(pub_id);
    if (it == corpus.publications.end())
        throw ApiError(ApiErrorCode::NotFound, "no publication with pub_id '" + pub_id + "'");
    return it->second;
}

void require_known_params(const std::map<std::string, json>& params,
                          std::initializer_list<const char*> known) {
    for (const auto& [key, value] : params) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw ApiError(ApiErrorCode::BadRequest, "unknown parameter '" + key + "'");
    }
}

json pub_summary(const Publication& p) {
    return json{{"pub_id", p.pub_id},
                {"title", p.title},
                {"num_citation", p.num_citation},
                {"year", p.year}};
}

json search_person(const Corpus& corpus, const std::map<std::string, json>& params) {
    require_known_params(params, {"name", "organization", "interest"});
    const std::string name = string_param(params, "name");
    const std::string organization = string_param(params, "organization");
    const std::string interest = string_param(params, "interest");
    if (name.empty() && organization.empty() && interest.empty())
        throw ApiError(ApiErrorCode::BadRequest,
                       "searchPerson needs at least one of name, organization, interest");
    json results = json::array();
    for (const auto& [id, s] : corpus.scholars) {  // map order == person_id order
        if (!name.empty() && !iequals(s.name, name)) continue;
        if (!organization.empty() && !iequals(s.organization, organization)) continue;
        if (!interest.empty()) {
            bool hit = false;
            for (const auto& i : s.interest)
                if (iequals(i, interest)) hit = true;
            if (!hit) continue;
        }
        results.push_back(
            {{"person_id", s.person_id}, {"name", s.name}, {"organization", s.organization}});
    }
    return results;
}

json get_person_basic_info(const Corpus& corpus, const std::map<std::string, json>& params) {
    require_known_params(params, {"person_id"});
    const std::string person_id = string_param(params, "person_id");
    if (person_id.empty())
        throw ApiError(ApiErrorCode::BadRequest, "getPersonBasicInfo requires person_id");
    const Scholar& s = scholar_or_404(corpus, person_id);
    return json{{"name", s.name},
                {"organization", s.organization},
                {"bio", s.bio},
                {"education_experience", s.education_experience},
                {"interest", s.interest}};
}

json get_person_pubs(const Corpus& corpus, const std::map<std::string, json>& params) {
    require_known_params(params, {"person_id"});
    const std::string person_id = string_param(params, "person_id");
    if (person_id.empty())
        throw ApiError(ApiErrorCode::BadRequest, "getPersonPubs requires person_id");
    const Scholar& s = scholar_or_404(corpus, person_id);
    json results = json::array();
    for (const auto& pid : s.pub_ids) results.push_back(pub_summary(pub_or_404(corpus, pid)));
    return results;
}

json search_publication(const Corpus& corpus, const std::map<std::string, json>& params) {
    require_known_params(params, {"publication_info"});
    const std::string text = string_param(params, "publication_info");
    if (text.empty())
        throw ApiError(ApiErrorCode::BadRequest, "searchPublication requires publication_info");
    json results = json::array();
    for (const auto& [id, p] : corpus.publications) {  // pub_id order
        if (!icontains(p.title, text)) continue;
        results.push_back({{"pub_id", p.pub_id}, {"title", p.title}});
    }
    return results;
}

json get_publication(const Corpus& corpus, const std::map<std::string, json>& params) {
    require_known_params(params, {"pub_id"});
    const std::string pub_id = string_param(params, "pub_id");
    if (pub_id.empty()) throw ApiError(ApiErrorCode::BadRequest, "getPublication requires pub_id");
    const Publication& p = pub_or_404(corpus, pub_id);
    json authors = json::array();
    for (const auto& aid : p.author_ids) {
        const Scholar& s = scholar_or_404(corpus, aid);
        authors.push_back({{"person_id", s.person_id}, {"name", s.name}});
    }
    return json{{"title", p.title},
                {"num_citation", p.num_citation},
                {"year", p.year},
                {"authors", authors}};
}

json get_coauthors(const Corpus& corpus, const std::map<std::string, json>& params) {
    require_known_params(params, {"person_id"});
    const std::string person_id = string_param(params, "person_id");
    if (person_id.empty())
        throw ApiError(ApiErrorCode::BadRequest, "getCoauthors requires person_id");
    const Scholar& s = scholar_or_404(corpus, person_id);
    std::set<std::string> coauthor_ids;
    for (const auto& pid : s.pub_ids) {
        for (const auto& aid : pub_or_404(corpus, pid).author_ids) {
            if (aid != person_id) coauthor_ids.insert(aid);
        }
    }
    json results = json::array();
    for (const auto& aid : coauthor_ids) {  // ascending
        const Scholar& c = scholar_or_404(corpus, aid);
        results.push_back({{"person_id", c.person_id}, {"name", c.name}});
    }
    return results;
}

}  // namespace

const char* api_error_code_name(ApiErrorCode code) {
    switch (code) {
        case ApiErrorCode::NotFound: return "NOT_FOUND";
        case ApiErrorCode::BadRequest: return "BAD_REQUEST";
        case ApiErrorCode::Transport: return "TRANSPORT";
    }
    return "TRANSPORT";
}

json query_endpoint(const Corpus& corpus, const std::string& api,
                    const std::map<std::string, json>& params) {
    if (api == "searchPerson") return search_person(corpus, params);
    if (api == "getPersonBasicInfo") return get_person_basic_info(corpus, params);
    if (api == "getPersonPubs") return get_person_pubs(corpus, params);
    if (api == "searchPublication") return search_publication(corpus, params);
    if (api == "getPublication") return get_publication(corpus, params);
    if (api == "getCoauthors") return get_coauthors(corpus, params);
    throw ApiError(ApiErrorCode::NotFound, "unknown api '" + api + "'");
}

struct ScholarlyService::Impl {
    const Corpus& corpus;
    httplib::Server server;

    explicit Impl(const Corpus& c) : corpus(c) {
        server.Get(R"(/api/([A-Za-z0-9_]+))", [this](const httplib::Request& req,
                                                     httplib::Response& res) {
            const std::string api = req.matches[1];
            std::map<std::string, json> params;
            for (const auto& [key, value] : req.params) params[key] = value;
            json body;
            int status = 200;
            try {
                body = json{{"ok", true}, {"data", query_endpoint(corpus, api, params)}};
            } catch (const ApiError& ex) {
                status = ex.code == ApiErrorCode::NotFound ? 404 : 400;
                body = json{{"ok", false},
                            {"error",
                             {{"code", api_error_code_name(ex.code)}, {"message", ex.what()}}}};
            }
            res.status = status;
            res.set_content(body.dump(), "application/json");
        });
        server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(json{{"ok", true}}.dump(), "application/json");
        });
    }
};

ScholarlyService::ScholarlyService(const Corpus& corpus) : impl_(new Impl(corpus)) {}

ScholarlyService::~ScholarlyService() { stop(); }

int ScholarlyService::start(const std::string& host, int port) {
    if (port == 0) {
        port_ = impl_->server.bind_to_any_port(host);
    } else {
        if (!impl_->server.bind_to_port(host, port))
            throw std::runtime_error("cannot bind to port " + std::to_string(port));
        port_ = port;
    }
    thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port_;
}

void ScholarlyService::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
    if (thread_.joinable()) thread_.join();
}

}  // namespace apichain

#include <unistd.h>

#include <atomic>
#include <fstream>

#include "pwq/groebner.hpp"
#include "pwq/json_io.hpp"

namespace pwq {

GroebnerCache::GroebnerCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

namespace {

Json generators_json(const IdealPresentation& ideal, MonomialOrder ord) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators) gens.push_back(to_json(g));
    return Json{{"order", order_name(ord)}, {"generators", gens}};
}

std::atomic<unsigned> tmp_counter{0};

}  // namespace

std::optional<GroebnerBasis> GroebnerCache::load_disk(const std::string& key,
                                                      const std::string& hash,
                                                      int arity) const {
    if (dir_.empty()) return std::nullopt;
    std::ifstream in(dir_ / (key + ".json"));
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (j.at("hash").get<std::string>() != hash) return std::nullopt;
        GroebnerBasis gb;
        gb.order = order_from_name(j.at("order").get<std::string>());
        gb.reduced = true;
        for (const auto& pj : j.at("basis")) {
            Polynomial p = polynomial_from_json(pj, gb.order);
            if (p.arity() != arity || p.is_zero()) return std::nullopt;
            gb.basis.push_back(std::move(p));
        }
        return gb;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable file: fall through to recompute
    }
}

void GroebnerCache::store_disk(const std::string& key, const std::string& hash,
                               const IdealPresentation& ideal, const GroebnerBasis& gb) const {
    if (dir_.empty()) return;
    Json basis = Json::array();
    for (const auto& p : gb.basis) basis.push_back(to_json(p));
    Json j{{"order", order_name(gb.order)},
           {"hash", hash},
           {"generators", generators_json(ideal, gb.order).at("generators")},
           {"basis", basis}};
    auto tmp = dir_ / (key + ".tmp" + std::to_string(::getpid()) + "." +
                       std::to_string(tmp_counter.fetch_add(1)));
    {
        std::ofstream out(tmp);
        out << j.dump(1);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, dir_ / (key + ".json"), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

GroebnerBasis GroebnerCache::get(const std::string& tag, const IdealPresentation& ideal,
                                 MonomialOrder ord) {
    std::string key = tag + "_" + order_name(ord);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = mem_.find(key); it != mem_.end()) return it->second;
    }
    std::string hash = content_hash(generators_json(ideal, ord));
    if (auto gb = load_disk(key, hash, ideal.arity)) {
        std::lock_guard<std::mutex> lock(mu_);
        mem_.emplace(key, *gb);
        return *gb;
    }
    GroebnerBasis gb = buchberger(ideal, ord);
    store_disk(key, hash, ideal, gb);
    std::lock_guard<std::mutex> lock(mu_);
    mem_.emplace(key, gb);
    return gb;
}

}  // namespace pwq

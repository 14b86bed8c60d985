#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include <unistd.h>

#include "wpv/recursion.hpp"
#include "wpv/serialize.hpp"

namespace wpv {

using nlohmann::json;

RecursionCache::Entry RecursionCache::find(int g, int n) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find({g, n});
    return it == entries_.end() ? nullptr : it->second;
}

RecursionCache::Entry RecursionCache::insert(VolumePoly v)
{
    auto entry = std::make_shared<const VolumePoly>(std::move(v));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace({entry->g(), entry->n()}, entry);
    if (inserted) dirty_ = true;
    return it->second;
}

std::vector<RecursionCache::Entry> RecursionCache::entries() const
{
    std::shared_lock lock(mutex_);
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [key, e] : entries_) out.push_back(e);
    return out;
}

std::size_t RecursionCache::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void RecursionCache::clear()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
    dirty_ = false;
}

void RecursionCache::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot read cache file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error("corrupt cache file " + path.string() + ": " + e.what());
    }
    if (!doc.is_object() || doc.value("format_version", -1) != kFormatVersion)
        throw Error("unsupported cache format in " + path.string());
    if (!doc.contains("volumes") || !doc["volumes"].is_object())
        throw Error("corrupt cache file " + path.string() + ": missing volumes");

    std::map<std::pair<int, int>, Entry> loaded;
    for (const auto& [key, value] : doc["volumes"].items()) {
        VolumePoly v = volume_from_json(value);
        if (key != std::to_string(v.g()) + "," + std::to_string(v.n()))
            throw Error("cache key " + key + " does not match its volume");
        const auto report = check_volume_invariants(v);
        if (!report.ok())
            throw Error("cache entry " + key + " fails invariants: " + report.violations.front());
        loaded.emplace(std::make_pair(v.g(), v.n()), std::make_shared<const VolumePoly>(std::move(v)));
    }
    std::unique_lock lock(mutex_);
    entries_ = std::move(loaded);
    dirty_ = false;
}

void RecursionCache::save(const std::filesystem::path& path)
{
    json volumes = json::object();
    for (const auto& e : entries())
        volumes[std::to_string(e->g()) + "," + std::to_string(e->n())] = volume_to_json(*e);
    const json doc = {{"format_version", kFormatVersion}, {"volumes", volumes}};

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp.string());
        out << doc.dump() << '\n';
        out.flush();
        if (!out) throw Error("failed writing cache file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot replace cache file " + path.string() + ": " + ec.message());
    }
    dirty_ = false;
}

}  // namespace wpv

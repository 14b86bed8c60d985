#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace wpv {

// Memo table for pure functions. Readers share the lock; the value is
// computed outside the lock and inserted with try_emplace, so a race only
// costs a duplicate computation of an identical value.
template <typename Key, typename Value>
class MemoTable {
public:
    template <typename Fn>
    Value get(const Key& key, Fn&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

}  // namespace wpv

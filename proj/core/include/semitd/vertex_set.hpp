#ifndef SEMITD_VERTEX_SET_HPP
#define SEMITD_VERTEX_SET_HPP

#include <algorithm>
#include <utility>
#include <vector>

namespace semitd {

/// A set of vertex ids kept as a sorted, duplicate-free vector.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet from_unsorted(std::vector<int> ids)
    {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        VertexSet s;
        s.ids_ = std::move(ids);
        return s;
    }

    const std::vector<int>& ids() const noexcept { return ids_; }
    int size() const noexcept { return static_cast<int>(ids_.size()); }
    bool empty() const noexcept { return ids_.empty(); }

    bool contains(int v) const
    {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }

    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> ids_;
};

} // namespace semitd

#endif

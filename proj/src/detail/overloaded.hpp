#ifndef WRIGHTLAB_DETAIL_OVERLOADED_HPP
#define WRIGHTLAB_DETAIL_OVERLOADED_HPP

namespace wrightlab::detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace wrightlab::detail

#endif

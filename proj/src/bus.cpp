#include "fsgss/bus.hpp"

#include "fsgss/errors.hpp"

namespace fsgss {

void MessageBus::AddInterceptor(Interceptor hook) { interceptors_.push_back(std::move(hook)); }

void MessageBus::Send(Envelope envelope) {
  std::optional<Envelope> current = std::move(envelope);
  for (const auto& hook : interceptors_) {
    current = hook(std::move(*current));
    if (!current) {
      return;
    }
  }
  std::string bytes = Encode(current->message);
  transcript_.push_back(current->from + "->" + current->to + "\n" + bytes);
  queues_[current->to].push_back({std::move(current->from), std::move(bytes)});
}

std::optional<Envelope> MessageBus::Receive(const std::string& party) {
  auto it = queues_.find(party);
  if (it == queues_.end() || it->second.empty()) {
    return std::nullopt;
  }
  Queued queued = std::move(it->second.front());
  it->second.pop_front();
  return Envelope{std::move(queued.from), party, Decode(queued.bytes)};
}

Envelope MessageBus::ReceiveOrThrow(const std::string& party) {
  auto envelope = Receive(party);
  if (!envelope) {
    throw ProtocolError("no message queued for '" + party + "'");
  }
  return std::move(*envelope);
}

}  // namespace fsgss

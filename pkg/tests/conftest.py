import hypothesis

hypothesis.settings.register_profile("fast", max_examples=25)
hypothesis.settings.load_profile("fast")

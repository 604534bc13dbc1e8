class AppConfig(dict):
    """
    Application configuration class.
    Inherits from dict to allow dictionary-like access to configuration values.
    Used for dependency injection to avoid binding raw dict type.
    """

    @classmethod
    def from_object(cls, config_object):
        """
        Collect the upper-case attributes of a configuration object.

        @param config_object: A class or module such as config.Config.
        @return: The AppConfig holding those settings.
        """
        return cls({key: getattr(config_object, key) for key in dir(config_object) if key.isupper()})
